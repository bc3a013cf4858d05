// Command-line front end: amalgam construction, validation, enumeration,
// counting, bounds, and entropy estimation with deterministic CSV/JSON
// output.  Data goes to stdout, diagnostics to stderr; exit code 2 marks
// precondition violations and 3 exhausted budgets.

#include "amalgam/amalgam_spec.hpp"
#include "amalgam/bounds.hpp"
#include "amalgam/counting.hpp"
#include "amalgam/entropy.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/fuchsian.hpp"
#include "amalgam/hyp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace amalgam;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write file '" + path + "'");
    out << text;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string homology_str(const std::vector<long>& h) {
    std::string s;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(h[i]);
    }
    return s;
}

std::string classes_to_csv(const std::vector<GeodesicClass>& cls) {
    std::string out = "word,length,trace,homology,primitive\n";
    for (const GeodesicClass& c : cls) {
        out += word_to_string(c.word);
        out += ',';
        out += fmt(c.length);
        out += ',';
        out += fmt(c.trace);
        out += ',';
        out += homology_str(c.homology);
        out += ',';
        out += c.primitive ? "1" : "0";
        out += '\n';
    }
    return out;
}

json chain_to_json(const ChainReport& r) {
    json j;
    j["s"] = r.s;
    j["u"] = r.u;
    j["k"] = r.k;
    j["B"] = r.B;
    j["L"] = r.L;
    j["kprime"] = r.kprime;
    j["margin_u_lo"] = r.margin_u_lo;
    j["margin_u_hi"] = r.margin_u_hi;
    j["margin_B_lo"] = r.margin_B_lo;
    j["margin_B_hi"] = r.margin_B_hi;
    j["margin_k"] = r.margin_k;
    j["margin_kprime"] = r.margin_kprime;
    j["all_hold"] = r.all_hold;
    return j;
}

std::vector<double> parse_grid(const std::string& g) {
    const auto c1 = g.find(':');
    const auto c2 = g.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw domain_error("grid must be a:b:step");
    const double a = std::stod(g.substr(0, c1));
    const double b = std::stod(g.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(g.substr(c2 + 1));
    if (!(step > 0.0)) throw domain_error("grid step must be positive");
    std::vector<double> xs;
    for (double x = a; x <= b + 1e-9; x += step) xs.push_back(x);
    return xs;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface-amalgam geodesic counting toolkit"};
    app.require_subcommand(1);

    // validate / metrics
    std::string spec_path;
    auto* cmd_validate = app.add_subcommand("validate", "check a spec file");
    cmd_validate->add_option("spec", spec_path, "amalgam spec JSON")->required();
    auto* cmd_metrics = app.add_subcommand("metrics", "area/gluing/systole metrics");
    cmd_metrics->add_option("spec", spec_path, "amalgam spec JSON")->required();

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build amalgam families");
    double cs = 0.1, cu = 2.0;
    int cm = 2;
    std::string emit_path, beta_kind = "separating";
    auto* cmd_xb = cmd_construct->add_subcommand("xb", "two-torus twist family");
    cmd_xb->add_option("--s", cs, "systole parameter in (0, 1/2]")->required();
    cmd_xb->add_option("--emit", emit_path, "also write the spec JSON here");
    auto* cmd_sbm = cmd_construct->add_subcommand("sbm", "m pasted copies of a double");
    cmd_sbm->add_option("--s", cs)->required();
    cmd_sbm->add_option("--u", cu)->required();
    cmd_sbm->add_option("--m", cm)->required();
    cmd_sbm->add_option("--beta", beta_kind, "separating | alpha");
    cmd_sbm->add_option("--emit", emit_path);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "closed geodesic classes");
    std::string base_kind = "torus", ledger_path;
    double es = 2.0, eu = 2.0, eL = 4.0, eslack = 1.5;
    cmd_enum->add_option("--base", base_kind, "torus | genus2")->required();
    cmd_enum->add_option("--s", es)->required();
    cmd_enum->add_option("--u", eu)->required();
    cmd_enum->add_option("--L", eL)->required();
    cmd_enum->add_option("--ledger", ledger_path, "also write the CSV here");
    cmd_enum->add_option("--slack", eslack, "orbit-search displacement slack");

    // count
    auto* cmd_count = app.add_subcommand("count", "lower/upper count records");
    std::string family = "xb", grid = "8:22:2";
    double qs = 0.1, qu = 2.0;
    int qm = 2;
    std::string qbeta = "separating";
    cmd_count->add_option("--family", family, "xb | sbm")->required();
    cmd_count->add_option("--s", qs);
    cmd_count->add_option("--u", qu);
    cmd_count->add_option("--m", qm);
    cmd_count->add_option("--beta", qbeta);
    cmd_count->add_option("--L-grid", grid, "a:b:step")->required();

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "upper-bound report");
    double bA = 0, bB = 0, bsys = 0, bL = 0;
    bool stepwise = false;
    cmd_bounds->add_option("--A", bA)->required();
    cmd_bounds->add_option("--B", bB)->required();
    cmd_bounds->add_option("--sys", bsys)->required();
    cmd_bounds->add_option("--L", bL)->required();
    cmd_bounds->add_flag("--stepwise", stepwise, "emit the full stepwise chain");

    // intersect
    auto* cmd_int = app.add_subcommand("intersect", "twist-family intersection number");
    long ik = 0, ikp = 0;
    std::string oracle = "homology";
    cmd_int->add_option("--k", ik)->required();
    cmd_int->add_option("--kprime", ikp)->required();
    cmd_int->add_option("--oracle", oracle, "homology | geometric");

    // entropy
    auto* cmd_ent = app.add_subcommand("entropy", "estimate growth rate from counts");
    std::string counts_path, mode = "plain";
    cmd_ent->add_option("--counts", counts_path, "count-record CSV")->required();
    cmd_ent->add_option("--mode", mode, "plain | ricks");

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "separating-curve crossing statistics");
    double ss = 2.0, su = 2.0, sL = 6.0, seps = 0.5, sband = 0.0;
    std::optional<double> beta_len_opt;
    double beta_len_in = -1.0;
    cmd_stats->add_option("--s", ss);
    cmd_stats->add_option("--u", su);
    cmd_stats->add_option("--L", sL)->required();
    cmd_stats->add_option("--eps", seps)->required();
    cmd_stats->add_option("--band", sband, "restrict mean to lengths above this");
    cmd_stats->add_option("--beta-length", beta_len_in,
                          "override the reference curve length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        EnumOptions opt;
        opt.max_seconds = max_seconds_from_env();

        if (*cmd_validate) {
            const AmalgamSpec spec = spec_from_json(slurp(spec_path));
            json j = json::array();
            for (const std::string& v : validate(spec)) j.push_back(v);
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_metrics) {
            const AmalgamSpec spec = spec_from_json(slurp(spec_path));
            const AmalgamMetrics m = metrics(spec, opt);
            json j;
            j["A"] = m.A;
            j["B"] = m.B;
            j["sys"] = m.sys;
            j["r0"] = m.r0;
            json nm = json::object();
            for (const auto& [id, n] : m.nmap) nm[id] = n;
            j["nmap"] = nm;
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_xb) {
            const AmalgamSpec spec = make_Xbsk(cs);
            const ChainReport chain = chain_check(cs);
            json j;
            j["k"] = chain.k;
            j["u"] = chain.u;
            j["B"] = chain.B;
            j["spec"] = json::parse(spec_to_json(spec));
            j["chain_check"] = chain_to_json(chain);
            std::cout << j.dump(2) << "\n";
            if (!emit_path.empty()) spit(emit_path, spec_to_json(spec));
        } else if (*cmd_sbm) {
            const AmalgamSpec spec = make_XSbm(cs, cu, cm, beta_kind);
            std::cout << spec_to_json(spec);
            if (!emit_path.empty()) spit(emit_path, spec_to_json(spec));
        } else if (*cmd_enum) {
            opt.bfs_slack = eslack;
            std::vector<GeodesicClass> cls;
            if (base_kind == "torus") {
                cls = enumerate_classes_free(build_one_holed_torus(es, eu), eL, opt);
            } else if (base_kind == "genus2") {
                cls = enumerate_classes_genus2(
                    double_across_boundary(build_one_holed_torus(es, eu)), eL, opt);
            } else {
                throw domain_error("enumerate: base must be torus or genus2");
            }
            const std::string csv = classes_to_csv(cls);
            std::cout << csv;
            if (!ledger_path.empty()) spit(ledger_path, csv);
        } else if (*cmd_count) {
            std::vector<CountRecord> rows;
            if (family == "xb") {
                const AmalgamSpec spec = make_Xbsk(qs);
                for (double L : parse_grid(grid)) rows.push_back(count_lower_Xbsk(spec, L));
            } else if (family == "sbm") {
                const AmalgamSpec spec = make_XSbm(qs, qu, qm, qbeta);
                for (double L : parse_grid(grid))
                    rows.push_back(count_lower_XSbm(spec, qm, L, nullptr, true, opt));
            } else {
                throw domain_error("count: family must be xb or sbm");
            }
            std::cout << count_records_to_csv(rows);
        } else if (*cmd_bounds) {
            const BoundsReport r = stepwise_report(bA, bB, bsys, bL);
            if (stepwise) {
                std::cout << bounds_report_to_json(r);
            } else {
                json j;
                j["upper_coarse_log10"] = r.upper_coarse_log10;
                j["entropy_upper"] = r.entropy_upper;
                std::cout << j.dump(2) << "\n";
            }
        } else if (*cmd_int) {
            const Word alpha = twist_word(1, 2, ikp);
            const Word beta = twist_word(2, 1, ik);
            long result = 0;
            if (oracle == "homology") {
                const auto ha = homology_class(alpha, 2);
                const auto hb = homology_class(beta, 2);
                result = std::labs(algebraic_intersection({ha[0], ha[1]}, {hb[0], hb[1]}));
            } else if (oracle == "geometric") {
                const TorusRep rep =
                    build_one_holed_torus(2.0 * hyp::asinh_stable(1.0),
                                          2.0 * hyp::asinh_stable(1.0));
                result = geometric_intersection_axes(rep, alpha, beta);
            } else {
                throw domain_error("intersect: oracle must be homology or geometric");
            }
            std::cout << result << "\n";
        } else if (*cmd_ent) {
            const CountSeries s = series_from_csv(slurp(counts_path));
            const EntropyMode m = (mode == "ricks") ? EntropyMode::ricks : EntropyMode::plain;
            const EntropyFit fit = estimate_entropy(s, m);
            json j;
            j["h"] = fit.h;
            j["mode"] = (m == EntropyMode::ricks ? "ricks" : "plain");
            j["tail_log_count_over_L"] = fit.tail;
            j["residual_rms"] = fit.residual_rms;
            j["rows"] = s.rows.size();
            std::cout << j.dump(2) << "\n";
        } else if (*cmd_stats) {
            if (beta_len_in > 0.0) beta_len_opt = beta_len_in;
            const Genus2Rep S = double_across_boundary(build_one_holed_torus(ss, su));
            const IntersectionStats st =
                empirical_intersection_stats(S, sL, seps, sband, beta_len_opt, opt);
            json j;
            j["mean_ratio"] = st.mean_ratio;
            j["good_fraction"] = st.good_fraction;
            j["c_beta_ref"] = st.c_beta_ref;
            j["collar_cap_fraction"] = st.collar_cap_fraction;
            j["n_band"] = st.n_band;
            j["n_total"] = st.n_total;
            j["small_sample"] = st.small_sample;
            std::cout << j.dump(2) << "\n";
        }
        return 0;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const convergence_error& e) {
        std::cerr << "did not converge: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 2;
    } catch (const construction_error& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
