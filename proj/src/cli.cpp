#include "tverberg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "tverberg/certify.hpp"
#include "tverberg/generators.hpp"
#include "tverberg/io.hpp"

namespace tverberg::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct LoadedComplex {
    std::string path;
    std::string digest;
    AnyComplex complex;
};

LoadedComplex load(const std::string& path, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    LoadedComplex lc;
    lc.path = path;
    lc.digest = digest(buf.str());
    lc.complex = parse_complex(buf.str());
    if (strict) validate_strict(lc.complex.cw);
    return lc;
}

std::size_t default_guard() {
    if (const char* env = std::getenv("TVERBERG_MAX_CELLS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw Error("TVERBERG_MAX_CELLS: expected a positive integer, got '" + std::string(env) +
                    "'");
    }
    return kDefaultConfGuard;
}

json profile_json(const HomologyProfile& H) {
    json j;
    j["empty"] = H.is_empty_complex;
    j["degrees"] = json::array();
    if (!H.is_empty_complex) {
        for (int k = 0; k <= H.computed_to; ++k) {
            json g;
            g["degree"] = k;
            g["betti"] = H.group(k).betti;
            g["torsion"] = json::array();
            for (const auto& t : H.group(k).torsion) g["torsion"].push_back(t.str());
            j["degrees"].push_back(std::move(g));
        }
    }
    return j;
}

void print_profile_text(std::ostream& out, const HomologyProfile& H) {
    if (H.is_empty_complex) {
        out << "empty complex\n";
        return;
    }
    out << "degree  betti  torsion\n";
    for (int k = 0; k <= H.computed_to; ++k) {
        out << "  " << k << "     " << H.group(k).betti << "     ";
        if (H.group(k).torsion.empty()) {
            out << "-";
        } else {
            for (std::size_t i = 0; i < H.group(k).torsion.size(); ++i)
                out << (i ? " " : "") << "Z/" << H.group(k).torsion[i].str();
        }
        out << "\n";
    }
}

json tuple_failure_json(const TupleFailure& f) {
    json j;
    j["cells"] = f.tuple.cells;
    j["total_dim"] = f.tuple.total_dim;
    j["required_level"] = f.required_level;
    j["complement_cells"] = f.complement_cells;
    j["complement_homology"] = profile_json(f.complement_homology);
    return j;
}

json complementary_json(const ComplementaryReport& r) {
    json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["checked"] = r.checked_count;
    j["counterexample"] = r.counterexample ? tuple_failure_json(*r.counterexample) : json(nullptr);
    if (!r.failures.empty() && r.failures.size() > 1) {
        j["failures"] = json::array();
        for (const auto& f : r.failures) j["failures"].push_back(tuple_failure_json(f));
    }
    return j;
}

json certificate_json(const TverbergCertificate& c) {
    json j;
    j["d"] = c.d;
    j["r"] = c.r;
    if (c.witness) {
        j["witness"] = json{{"p", c.witness->p}, {"k", c.witness->k}};
    } else {
        j["witness"] = nullptr;
    }
    j["method"] = c.method;
    j["verdict"] = c.certified ? "certified" : "inconclusive";
    j["reason"] = c.reason;
    if (c.complementary_evidence)
        j["complementary_evidence"] = complementary_json(*c.complementary_evidence);
    if (c.conf_evidence) {
        json e;
        e["cells"] = c.conf_evidence->cell_count;
        e["required_n"] = c.conf_evidence->required_n;
        e["acyclic"] = c.conf_evidence->acyclic;
        e["homology"] = profile_json(c.conf_evidence->profile);
        j["conf_evidence"] = std::move(e);
    }
    return j;
}

json graph_json(const Multigraph& G) {
    json j;
    j["vertices"] = G.vertex_count;
    j["edges"] = json::array();
    for (auto [a, b] : G.edges) j["edges"].push_back(json::array({a, b}));
    return j;
}

void emit(std::ostream& out, bool json_mode, const std::string& command,
          const LoadedComplex* input, json result) {
    if (!json_mode) return;  // text output is written by each command
    json envelope;
    envelope["tool"] = kToolName;
    envelope["version"] = kToolVersion;
    envelope["command"] = command;
    if (input) {
        envelope["input"] = json{{"path", input->path}, {"digest", input->digest}};
    } else {
        envelope["input"] = nullptr;
    }
    envelope["result"] = std::move(result);
    out << envelope.dump(2) << "\n";
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"certifies the topological Tverberg property of finite regular CW complexes"};
    app.require_subcommand(1);

    bool json_mode = false;
    bool strict = false;
    app.add_flag("--json", json_mode, "machine-readable report");
    app.add_flag("--strict", strict, "validate that every cell boundary is a homology sphere");

    std::string file;
    int opt_n = 0, opt_k = 0, opt_d = 0;
    long long opt_r = 0;
    bool all_failures = false, with_homology = false;
    std::size_t max_cells = 0;
    std::string method_str = "both";

    auto* homology_cmd = app.add_subcommand("homology", "reduced integral homology");
    homology_cmd->add_option("file", file)->required();

    auto* acyclic_cmd = app.add_subcommand("acyclic", "n-acyclicity test");
    acyclic_cmd->add_option("file", file)->required();
    acyclic_cmd->add_option("--n", opt_n, "acyclicity level")->required();

    auto* comp_cmd = app.add_subcommand("complementary", "k-complementary n-acyclic check");
    comp_cmd->add_option("file", file)->required();
    comp_cmd->add_option("--k", opt_k)->required();
    comp_cmd->add_option("--n", opt_n)->required();
    comp_cmd->add_flag("--all", all_failures, "report every failing tuple");

    auto* conf_cmd = app.add_subcommand("conf", "discretized configuration space census");
    conf_cmd->add_option("file", file)->required();
    conf_cmd->add_option("--r", opt_r)->required();
    conf_cmd->add_flag("--homology", with_homology);
    conf_cmd->add_option("--max-cells", max_cells, "cell guard (default 200000)");

    auto* certify_cmd = app.add_subcommand("certify", "Tverberg-property certificate");
    certify_cmd->add_option("file", file)->required();
    certify_cmd->add_option("--d", opt_d)->required();
    certify_cmd->add_option("--r", opt_r)->required();
    certify_cmd->add_option("--method", method_str)
        ->check(CLI::IsMember({"complementary", "deleted-product", "both"}));
    certify_cmd->add_option("--max-cells", max_cells);

    auto* graph_cmd = app.add_subcommand("graph", "dimension-1 classification");
    graph_cmd->require_subcommand(1);
    auto* classify_cmd = graph_cmd->add_subcommand("classify", "(1,2)-Tverberg classifier");
    classify_cmd->add_option("file", file)->required();
    int corpus_max_edges = 0;
    auto* corpus_cmd = graph_cmd->add_subcommand("corpus", "classifier vs Conf_2 connectivity");
    corpus_cmd->add_option("--max-edges", corpus_max_edges)->required();

    std::string gen_name, gen_out, gen_of;
    std::optional<int> gen_param;
    auto* gen_cmd = app.add_subcommand("gen", "write a generated complex");
    gen_cmd->add_option("name", gen_name,
                        "simplex | boundary-simplex | cycle | path | y | minimal-cw-sphere | "
                        "cross-polytope | suspension")
        ->required();
    gen_cmd->add_option("param", gen_param, "integer parameter where applicable");
    gen_cmd->add_option("--out", gen_out, "output file")->required();
    gen_cmd->add_option("--of", gen_of, "input complex (suspension)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    graph_cmd->fallthrough();
    classify_cmd->fallthrough();
    corpus_cmd->fallthrough();

    std::vector<const char*> argv;
    argv.push_back(kToolName);
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    const std::string command = join_args(args);

    try {
        if (*homology_cmd) {
            auto lc = load(file, strict);
            auto H = reduced_homology(lc.complex.cw);
            json result;
            result["homology"] = profile_json(H);
            if (!lc.complex.cw.empty()) result["euler"] = euler_characteristic(lc.complex.cw);
            emit(out, json_mode, command, &lc, std::move(result));
            if (!json_mode) print_profile_text(out, H);
            return kExitOk;
        }

        if (*acyclic_cmd) {
            auto lc = load(file, strict);
            const bool ok = is_n_acyclic(lc.complex.cw, opt_n);
            std::optional<int> witness;
            if (!ok && !lc.complex.cw.empty() && opt_n >= 0) {
                auto H = reduced_homology_up_to(lc.complex.cw, opt_n);
                for (int k = 0; k <= opt_n && !witness; ++k)
                    if (k <= H.complex_dim && !H.group(k).trivial()) witness = k;
            }
            json result;
            result["n"] = opt_n;
            result["acyclic"] = ok;
            result["witness_degree"] = witness ? json(*witness) : json(nullptr);
            if (!ok && lc.complex.cw.empty()) result["witness_degree"] = "empty";
            emit(out, json_mode, command, &lc, std::move(result));
            if (!json_mode) {
                out << (ok ? "acyclic" : "not acyclic") << " (n = " << opt_n << ")";
                if (witness) out << ", first nontrivial degree " << *witness;
                if (!ok && lc.complex.cw.empty()) out << ", complex is empty";
                out << "\n";
            }
            return ok ? kExitOk : kExitNegative;
        }

        if (*comp_cmd) {
            auto lc = load(file, strict);
            auto report =
                check_complementary_acyclic(lc.complex.cw, opt_k, opt_n, all_failures, lc.digest);
            emit(out, json_mode, command, &lc, complementary_json(report));
            if (!json_mode) {
                out << (report.pass ? "pass" : "fail") << ": " << report.k << "-complementary "
                    << report.n << "-acyclic (" << report.checked_count << " tuples checked)\n";
                for (const auto& f :
                     report.pass ? std::vector<TupleFailure>{}
                                 : (all_failures ? report.failures
                                                 : std::vector<TupleFailure>{*report.counterexample})) {
                    out << "  counterexample (";
                    for (std::size_t i = 0; i < f.tuple.cells.size(); ++i)
                        out << (i ? ", " : "") << f.tuple.cells[i];
                    out << "): complement has " << f.complement_cells
                        << " cells, required " << f.required_level << "-acyclic\n";
                }
            }
            return report.pass ? kExitOk : kExitNegative;
        }

        if (*conf_cmd) {
            auto lc = load(file, strict);
            const std::size_t guard = max_cells ? max_cells : default_guard();
            auto conf = deleted_product(lc.complex.cw, static_cast<int>(opt_r), guard);
            json result;
            result["r"] = opt_r;
            result["cells"] = conf.underlying.size();
            json census = json::object();
            for (auto [d, c] : conf.census()) census[std::to_string(d)] = c;
            result["census"] = std::move(census);
            result["connected"] = is_connected(conf.underlying);
            std::optional<HomologyProfile> H;
            if (with_homology) {
                H = reduced_homology(conf.underlying);
                result["homology"] = profile_json(*H);
            }
            emit(out, json_mode, command, &lc, std::move(result));
            if (!json_mode) {
                out << "Conf_" << opt_r << ": " << conf.underlying.size() << " cells";
                for (auto [d, c] : conf.census()) out << ", dim " << d << ": " << c;
                out << (is_connected(conf.underlying) ? ", connected" : ", disconnected") << "\n";
                if (H) print_profile_text(out, *H);
            }
            return kExitOk;
        }

        if (*certify_cmd) {
            auto lc = load(file, strict);
            const std::size_t guard = max_cells ? max_cells : default_guard();
            auto cert = certify_tverberg(lc.complex.cw, opt_d, opt_r, parse_method(method_str),
                                         guard, lc.digest);
            emit(out, json_mode, command, &lc, certificate_json(cert));
            if (!json_mode) {
                out << (cert.certified ? "certified" : "inconclusive") << " (d = " << cert.d
                    << ", r = " << cert.r << ", method = " << cert.method << ")\n"
                    << "  " << cert.reason << "\n";
            }
            return cert.certified ? kExitOk : kExitNegative;
        }

        if (*classify_cmd) {
            auto lc = load(file, strict);
            if (!lc.complex.graph)
                throw ParseError("graph classify: input type must be \"graph\"");
            const bool verdict = classify_12_tverberg(*lc.complex.graph);
            json result;
            result["tverberg_1_2"] = verdict;
            emit(out, json_mode, command, &lc, std::move(result));
            if (!json_mode)
                out << (verdict ? "(1,2)-Tverberg" : "not (1,2)-Tverberg by the classifier")
                    << "\n";
            return verdict ? kExitOk : kExitNegative;
        }

        if (*corpus_cmd) {
            auto table = corpus_crosscheck(corpus_max_edges);
            json result;
            result["max_edges"] = table.max_edges;
            result["graphs"] = table.rows.size();
            result["rows"] = json::array();
            for (const auto& row : table.rows) {
                json r;
                r["graph"] = graph_json(row.graph);
                r["classifier"] = row.classifier;
                r["conf2_connected"] = row.conf2_connected;
                result["rows"].push_back(std::move(r));
            }
            result["sound"] = table.sound();
            emit(out, json_mode, command, nullptr, std::move(result));
            if (!json_mode) {
                out << "graphs with <= " << table.max_edges << " edges: " << table.rows.size()
                    << "\n";
                for (const auto& row : table.rows) {
                    out << "  n=" << row.graph.vertex_count << " edges=[";
                    for (std::size_t i = 0; i < row.graph.edges.size(); ++i)
                        out << (i ? " " : "") << row.graph.edges[i].first << "-"
                            << row.graph.edges[i].second;
                    out << "] classifier=" << (row.classifier ? "true" : "false")
                        << " conf2=" << (row.conf2_connected ? "connected" : "disconnected")
                        << "\n";
                }
                out << (table.sound() ? "sound: no connected Conf_2 with classifier false"
                                      : "VIOLATION: connected Conf_2 with classifier false")
                    << "\n";
            }
            return table.sound() ? kExitOk : kExitNegative;
        }

        if (*gen_cmd) {
            std::string text;
            if (gen_name == "simplex" || gen_name == "boundary-simplex" ||
                gen_name == "cross-polytope") {
                if (!gen_param) throw Error("gen " + gen_name + ": missing integer parameter");
                if (gen_name == "simplex") text = simplicial_to_text(simplex(*gen_param));
                if (gen_name == "boundary-simplex")
                    text = simplicial_to_text(boundary_simplex(*gen_param));
                if (gen_name == "cross-polytope")
                    text = simplicial_to_text(cross_polytope_boundary(*gen_param));
            } else if (gen_name == "cycle" || gen_name == "path") {
                if (!gen_param) throw Error("gen " + gen_name + ": missing integer parameter");
                text = graph_to_text(gen_name == "cycle" ? cycle_graph(*gen_param)
                                                         : path_graph(*gen_param));
            } else if (gen_name == "y") {
                text = graph_to_text(y_graph());
            } else if (gen_name == "minimal-cw-sphere") {
                if (!gen_param) throw Error("gen minimal-cw-sphere: missing integer parameter");
                text = cw_to_text(minimal_cw_sphere(*gen_param));
            } else if (gen_name == "suspension") {
                if (gen_of.empty()) throw Error("gen suspension: --of FILE is required");
                auto base = load(gen_of, strict);
                if (!base.complex.simplicial)
                    throw Error("gen suspension: --of input must be simplicial");
                text = simplicial_to_text(suspension(*base.complex.simplicial));
            } else {
                throw Error("gen: unknown generator '" + gen_name + "'");
            }
            std::ofstream outfile(gen_out, std::ios::binary);
            if (!outfile) throw Error("gen: cannot write '" + gen_out + "'");
            outfile << text;
            outfile.close();
            json result;
            result["generator"] = gen_name;
            if (gen_param) result["param"] = *gen_param;
            result["path"] = gen_out;
            result["digest"] = digest(text);
            emit(out, json_mode, command, nullptr, std::move(result));
            if (!json_mode) out << "wrote " << gen_out << "\n";
            return kExitOk;
        }
    } catch (const SizeLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    err << "error: no subcommand\n";
    return kExitError;
}

}  // namespace tverberg::cli
