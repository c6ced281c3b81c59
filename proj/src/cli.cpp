#include "workbench/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "workbench/cache.hpp"
#include "workbench/canonical.hpp"
#include "workbench/construct.hpp"
#include "workbench/io.hpp"
#include "workbench/lowdim.hpp"
#include "workbench/scenarios.hpp"
#include "workbench/search.hpp"
#include "workbench/spectral.hpp"

namespace workbench {

namespace {

using nlohmann::json;

json set_to_json(const SetWord& w) { return json(w.elements()); }

json family_to_json(const Family& fam) {
    json members = json::array();
    for (const SetWord& w : fam.members()) members.push_back(set_to_json(w));
    json j{{"n", fam.ground_n()}, {"members", members}};
    if (fam.uniformity())
        j["k"] = *fam.uniformity();
    else
        j["k"] = nullptr;
    return j;
}

Family family_from_json(const json& j) {
    std::vector<SetWord> members;
    for (const auto& m : j.at("members")) members.push_back(SetWord::of_vector(m.get<std::vector<int>>()));
    std::optional<int> k;
    if (j.contains("k") && !j.at("k").is_null()) k = j.at("k").get<int>();
    return Family(j.at("n").get<int>(), std::move(members), k);
}

json bigint_to_json(const bigint& v) {
    static const bigint lo = std::numeric_limits<std::int64_t>::min();
    static const bigint hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

json search_result_to_json(const SearchResult& res) {
    json witnesses = json::array();
    for (const Family& w : res.witnesses) witnesses.push_back(family_to_json(w));
    return json{{"best_size", res.best_size},
                {"status", res.status == SearchResult::Status::proved ? "proved" : "lower_bound_only"},
                {"upper_bound", res.upper_bound},
                {"witnesses", witnesses},
                {"witness_count_total", res.witness_total},
                {"universe_n", res.universe_n}};
}

SearchResult search_result_from_json(const json& j) {
    SearchResult res;
    res.best_size = j.at("best_size").get<int>();
    res.status = j.at("status").get<std::string>() == "proved" ? SearchResult::Status::proved
                                                               : SearchResult::Status::lower_bound_only;
    res.upper_bound = j.at("upper_bound").get<long long>();
    for (const auto& w : j.at("witnesses")) res.witnesses.push_back(family_from_json(w));
    res.witness_total = j.at("witness_count_total").get<std::uint64_t>();
    res.universe_n = j.at("universe_n").get<int>();
    return res;
}

json cert_to_json(const Family& fam, const SunflowerCert& cert, int s, const CoreConstraint& cc) {
    json members = json::array();
    for (int idx : cert.member_indices) members.push_back(set_to_json(fam[static_cast<std::size_t>(idx)]));
    return json{{"found", true},
                {"s", s},
                {"core", set_to_json(cert.core)},
                {"members", members},
                {"constraint", json{{"kind", cc.kind_name()}, {"c", cc.c}}}};
}

CoreConstraint parse_core_option(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    if (kind == "any") return CoreConstraint::any();
    if (colon == std::string::npos)
        throw std::invalid_argument("--core expects exact:<c>, at_most:<c>, or any");
    return CoreConstraint::from_kind_name(kind, std::stoi(text.substr(colon + 1)));
}

struct CommonOpts {
    std::uint64_t budget_nodes = Budget{}.max_nodes;
    double budget_secs = Budget{}.max_seconds;
    int threads = 0;
    bool pretty = false;
    bool no_cache = false;

    Budget budget() const { return Budget{budget_nodes, budget_secs}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--budget-nodes", opts.budget_nodes, "search node limit");
    cmd->add_option("--budget-secs", opts.budget_secs, "wall clock limit in seconds");
    cmd->add_option("--threads", opts.threads, "worker pool size (default: logical cores)");
    cmd->add_flag("--pretty", opts.pretty, "human-readable table instead of JSON");
    cmd->add_flag("--no-cache", opts.no_cache, "skip the run cache");
}

void emit_search(std::ostream& out, const json& payload, bool pretty) {
    if (!pretty) {
        out << payload.dump() << "\n";
        return;
    }
    out << "best_size    " << payload.at("best_size") << "\n";
    out << "status       " << payload.at("status").get<std::string>() << "\n";
    out << "upper_bound  " << payload.at("upper_bound") << "\n";
    out << "witnesses    " << payload.at("witness_count_total") << " class(es), "
        << payload.at("witnesses").size() << " stored\n";
}

int exit_code_for(const SearchResult& res) {
    return res.status == SearchResult::Status::proved ? kExitOk : kExitTruncated;
}

/// Cached execution of a search-style subcommand: on a hit the stored result
/// JSON is replayed byte-identically. Budget-truncated results are never
/// stored, so a later run with a larger budget can still complete.
json run_cached(const std::string& subcommand, const json& params, const CommonOpts& opts,
                const std::function<std::pair<json, std::uint64_t>()>& compute) {
    const std::string key = cache_key(subcommand, params);
    if (!opts.no_cache) {
        if (auto rec = cache_lookup(key); rec && rec->subcommand == subcommand && rec->params == params)
            return rec->result;
    }
    const auto t0 = std::chrono::steady_clock::now();
    auto [result, nodes] = compute();
    const bool complete = (!result.contains("status") || result.at("status") == "proved") &&
                          (!result.contains("optimal") || result.at("optimal") == true);
    if (!opts.no_cache && complete) {
        RunRecord rec;
        rec.subcommand = subcommand;
        rec.params = params;
        rec.result = result;
        rec.nodes = nodes;
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        cache_store(key, rec);
    }
    return result;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sunflower-free set family workbench", "workbench"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "exact phi(s,t) by exhaustive search");
    int phi_s = 0, phi_t = 0;
    CommonOpts phi_opts;
    phi_cmd->add_option("-s", phi_s, "petal count")->required();
    phi_cmd->add_option("-t", phi_t, "uniformity")->required();
    add_common(phi_cmd, phi_opts);

    // graphcase
    auto* gc_cmd = app.add_subcommand("graphcase", "t=2 case with witness degree sequences");
    int gc_s = 0;
    CommonOpts gc_opts;
    gc_cmd->add_option("-s", gc_s, "petal count")->required();
    add_common(gc_cmd, gc_opts);

    // oracle
    auto* or_cmd = app.add_subcommand("oracle", "exact constrained maximum over C([n],k)");
    int or_n = 0, or_k = 0, or_s = 0, or_t = 0;
    CommonOpts or_opts;
    or_cmd->add_option("-n", or_n)->required();
    or_cmd->add_option("-k", or_k)->required();
    or_cmd->add_option("-s", or_s)->required();
    or_cmd->add_option("-t", or_t)->required();
    add_common(or_cmd, or_opts);

    // sstar
    auto* ss_cmd = app.add_subcommand("sstar", "lexicographic optimization of the layered vector");
    int ss_s = 0, ss_t = 0;
    CommonOpts ss_opts;
    ss_cmd->add_option("-s", ss_s)->required();
    ss_cmd->add_option("-t", ss_t)->required();
    add_common(ss_cmd, ss_opts);

    // build
    auto* build_cmd = app.add_subcommand("build", "emit a constructed family in text format");
    build_cmd->require_subcommand(1);
    auto* bb_cmd = build_cmd->add_subcommand("basic", "all k-sets tracing into a uniform family");
    std::string bb_file;
    int bb_n = 0, bb_k = 0;
    bb_cmd->add_option("--t-file", bb_file, "uniform family file")->required();
    bb_cmd->add_option("-n", bb_n)->required();
    bb_cmd->add_option("-k", bb_k)->required();
    auto* bf_cmd = build_cmd->add_subcommand("fs", "all k-sets tracing into a layered family");
    std::string bf_file;
    int bf_n = 0, bf_k = 0, bf_t = -1;
    bf_cmd->add_option("--s-file", bf_file, "layered family file")->required();
    bf_cmd->add_option("-n", bf_n)->required();
    bf_cmd->add_option("-k", bf_k)->required();
    bf_cmd->add_option("-t", bf_t, "base layer (default: smallest member size)");
    auto* bt_cmd = build_cmd->add_subcommand("thm13", "two-clique extremal family, odd s");
    int bt_s = 0, bt_n = 0, bt_k = 0;
    bt_cmd->add_option("-s", bt_s)->required();
    bt_cmd->add_option("-n", bt_n)->required();
    bt_cmd->add_option("-k", bt_k)->required();

    // count
    auto* count_cmd = app.add_subcommand("count", "exact counts from the layered formula");
    count_cmd->require_subcommand(1);
    auto* cf_cmd = count_cmd->add_subcommand("fs", "size of the traced family");
    std::string cf_file;
    int cf_n = 0, cf_k = 0, cf_t = -1;
    cf_cmd->add_option("--s-file", cf_file)->required();
    cf_cmd->add_option("-n", cf_n)->required();
    cf_cmd->add_option("-k", cf_k)->required();
    cf_cmd->add_option("-t", cf_t, "base layer (default: smallest member size)");

    // find
    auto* find_cmd = app.add_subcommand("find", "search a family for a sunflower");
    std::string find_file, find_core = "any";
    int find_s = 0;
    find_cmd->add_option("--family", find_file)->required();
    find_cmd->add_option("-s", find_s)->required();
    find_cmd->add_option("--core", find_core, "exact:<c> | at_most:<c> | any");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "check a sunflower certificate");
    std::string ver_family, ver_cert;
    ver_cmd->add_option("--family", ver_family)->required();
    ver_cmd->add_option("--cert", ver_cert, "certificate JSON file")->required();

    // johnson
    auto* jo_cmd = app.add_subcommand("johnson", "Johnson graph statistics");
    int jo_n = 0, jo_m = 0;
    bool jo_lambda = false;
    jo_cmd->add_option("-n", jo_n)->required();
    jo_cmd->add_option("-m", jo_m)->required();
    jo_cmd->add_flag("--lambda2", jo_lambda, "include the Laplacian spectral gap");

    // kk
    auto* kk_cmd = app.add_subcommand("kk", "shadow bound check");
    std::string kk_file;
    int kk_h = 0;
    kk_cmd->add_option("--family", kk_file)->required();
    kk_cmd->add_option("-h", kk_h, "shadow layer")->required();

    // repro
    auto* rep_cmd = app.add_subcommand("repro", "run named verification scenarios");
    std::string rep_name = "acceptance";
    rep_cmd->add_option("scenario", rep_name, "scenario name, `acceptance` for all, or `list`");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*phi_cmd) {
            const json params{{"s", phi_s}, {"t", phi_t}};
            SearchResult res;
            const json payload = run_cached("phi", params, phi_opts, [&] {
                res = phi(phi_s, phi_t, phi_opts.budget(), phi_opts.threads);
                return std::make_pair(search_result_to_json(res), res.nodes);
            });
            emit_search(out, payload, phi_opts.pretty);
            return payload.at("status").get<std::string>() == "proved" ? kExitOk : kExitTruncated;
        }
        if (*gc_cmd) {
            const json params{{"s", gc_s}};
            const json payload = run_cached("graphcase", params, gc_opts, [&] {
                GraphCaseResult gc = max_graph_case(gc_s, gc_opts.budget(), gc_opts.threads);
                json j = search_result_to_json(gc.result);
                j["degree_sequences"] = gc.degree_sequences;
                return std::make_pair(j, gc.result.nodes);
            });
            emit_search(out, payload, gc_opts.pretty);
            return payload.at("status").get<std::string>() == "proved" ? kExitOk : kExitTruncated;
        }
        if (*or_cmd) {
            SearchResult res = duke_erdos_oracle(or_n, or_k, or_s, or_t, or_opts.budget(), or_opts.threads);
            emit_search(out, search_result_to_json(res), or_opts.pretty);
            return exit_code_for(res);
        }
        if (*ss_cmd) {
            const json params{{"s", ss_s}, {"t", ss_t}};
            const json payload = run_cached("sstar", params, ss_opts, [&] {
                // a cached phi proof satisfies the solver's precondition without recomputation
                std::optional<SearchResult> phi_pre;
                const json phi_params{{"s", ss_s}, {"t", ss_t}};
                if (!ss_opts.no_cache) {
                    if (auto rec = cache_lookup(cache_key("phi", phi_params)); rec && rec->subcommand == "phi")
                        phi_pre = search_result_from_json(rec->result);
                }
                SStarResult sr = solve_sstar(ss_s, ss_t, ss_opts.budget(), ss_opts.threads,
                                             phi_pre ? &*phi_pre : nullptr);
                json phitilde_json = json::array();
                for (const bigint& v : sr.phi_tilde) phitilde_json.push_back(bigint_to_json(v));
                json optima = json::array();
                for (const LayeredCandidate& cand : sr.optima)
                    optima.push_back(json{{"family", family_to_json(cand.family)},
                                          {"support_size", support(cand.family.layer(cand.t)).count()}});
                return std::make_pair(json{{"phitilde", phitilde_json},
                                           {"optima", optima},
                                           {"optima_total", sr.optima_total},
                                           {"count_truncated", sr.count_truncated},
                                           {"optimal", sr.optimal}},
                                      std::uint64_t{0});
            });
            if (ss_opts.pretty) {
                out << "phitilde     [";
                for (std::size_t i = 0; i < payload.at("phitilde").size(); ++i)
                    out << (i ? " " : "") << payload.at("phitilde")[i];
                out << "]\n";
                out << "optima       " << payload.at("optima_total") << " class(es), "
                    << payload.at("optima").size() << " stored\n";
                out << "optimal      " << (payload.at("optimal").get<bool>() ? "yes" : "no") << "\n";
            } else {
                out << payload.dump() << "\n";
            }
            return payload.at("optimal").get<bool>() ? kExitOk : kExitTruncated;
        }
        if (*bb_cmd) {
            out << serialize_family(build_basic(load_family_file(bb_file), bb_n, bb_k));
            return kExitOk;
        }
        if (*bf_cmd) {
            const Family s_fam = load_family_file(bf_file);
            const int t = bf_t >= 0 ? bf_t : s_fam.min_member_size();
            out << serialize_family(build_fs(s_fam, t, bf_n, bf_k));
            return kExitOk;
        }
        if (*bt_cmd) {
            out << serialize_family(build_theorem13(bt_s, bt_n, bt_k));
            return kExitOk;
        }
        if (*cf_cmd) {
            const Family s_fam = load_family_file(cf_file);
            const int t = cf_t >= 0 ? cf_t : s_fam.min_member_size();
            out << count_fs(s_fam, t, cf_n, cf_k).str() << "\n";
            return kExitOk;
        }
        if (*find_cmd) {
            const Family fam = load_family_file(find_file);
            const CoreConstraint cc = parse_core_option(find_core);
            const auto cert = find_sunflower(fam, find_s, cc);
            if (cert)
                out << cert_to_json(fam, *cert, find_s, cc).dump() << "\n";
            else
                out << json{{"found", false}}.dump() << "\n";
            return kExitOk;
        }
        if (*ver_cmd) {
            const Family fam = load_family_file(ver_family);
            std::ifstream certin(ver_cert);
            if (!certin) throw std::invalid_argument("cannot open certificate file: " + ver_cert);
            json cj;
            certin >> cj;
            const int s = cj.at("s").get<int>();
            const CoreConstraint cc = CoreConstraint::from_kind_name(
                cj.at("constraint").at("kind").get<std::string>(), cj.at("constraint").at("c").get<int>());
            SunflowerCert cert;
            cert.core = SetWord::of_vector(cj.at("core").get<std::vector<int>>());
            bool members_found = true;
            for (const auto& mj : cj.at("members")) {
                const SetWord w = SetWord::of_vector(mj.get<std::vector<int>>());
                const auto& mem = fam.members();
                const auto it = std::lower_bound(mem.begin(), mem.end(), w);
                if (it == mem.end() || !(*it == w)) {
                    members_found = false;
                    break;
                }
                cert.member_indices.push_back(static_cast<int>(it - mem.begin()));
            }
            std::string reason;
            const bool valid = members_found && verify_cert(fam, cert, s, cc, &reason);
            if (!members_found) reason = "certificate member is not in the family";
            out << json{{"valid", valid}, {"reason", reason}}.dump() << "\n";
            return kExitOk;
        }
        if (*jo_cmd) {
            const VertexGraph g = johnson(jo_n, jo_m);
            json j{{"n", jo_n},
                   {"m", jo_m},
                   {"vertices", g.vertex_count()},
                   {"edges", g.edge_count()},
                   {"degree", g.regular_degree()},
                   {"connected", g.connected()}};
            if (jo_lambda) j["lambda2"] = lambda2(g).lambda2;
            out << j.dump() << "\n";
            return kExitOk;
        }
        if (*kk_cmd) {
            const Family fam = load_family_file(kk_file);
            const KruskalKatonaReport rep = kk_report(fam, kk_h);
            out << json{{"family_size", fam.size()}, {"h", kk_h},           {"x", rep.x},
                        {"bound", rep.bound},        {"shadow_size", rep.shadow_size},
                        {"holds", rep.holds}}
                       .dump()
                << "\n";
            return kExitOk;
        }
        if (*rep_cmd) {
            const auto& scenarios = acceptance_scenarios();
            if (rep_name == "list") {
                for (const Scenario& sc : scenarios) out << sc.name << "  " << sc.summary << "\n";
                return kExitOk;
            }
            bool all_pass = true;
            bool any_run = false;
            for (const Scenario& sc : scenarios) {
                if (rep_name != "acceptance" && rep_name != sc.name) continue;
                any_run = true;
                const ScenarioResult r = sc.run();
                all_pass = all_pass && r.pass;
                std::ostringstream line;
                line << (r.pass ? "[PASS] " : "[FAIL] ") << sc.name << " (" << std::fixed
                     << std::setprecision(1) << r.seconds << "s) " << r.detail;
                out << line.str() << "\n";
            }
            if (!any_run) {
                err << "unknown scenario: " << rep_name << "\n";
                return kExitInputError;
            }
            return all_pass ? kExitOk : kExitInputError;
        }
    } catch (const budget_error& e) {
        err << "budget: " << e.what() << "\n";
        return kExitTruncated;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace workbench
