#include "ballpark/cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballpark/errors.hpp"
#include "ballpark/extent.hpp"
#include "ballpark/io.hpp"
#include "ballpark/meb.hpp"
#include "ballpark/partition.hpp"
#include "ballpark/radii.hpp"
#include "ballpark/simplex.hpp"

namespace ballpark::cli {

namespace {

using nlohmann::json;

json point_json(const Point& p) { return json(p); }

json report_json(const BoundReport& r) {
    return json{{"name", r.bound_name}, {"quantity", r.quantity}, {"bound", r.bound},
                {"slack", r.slack},     {"holds", r.holds},       {"note", r.note}};
}

void print_report_text(std::ostream& out, const BoundReport& r) {
    out << r.bound_name << ": quantity " << r.quantity << ", bound " << r.bound << ", slack "
        << r.slack << (r.holds ? " [holds]" : " [VIOLATED]");
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
}

// Re-evaluate holds against the tolerance the caller asked for.
void apply_tolerance(BoundReport& r, double rel_eps) {
    r.holds = r.slack >= -(rel_eps * std::max(1.0, std::abs(r.bound)));
}

struct CommandOutput {
    json result;
    std::vector<BoundReport> reports;
};

CommandOutput run_meb(const RunConfig& cfg, const PointSet& ps) {
    const MebResult r = minimum_enclosing_ball(ps, cfg.seed);
    const EnclosureReport enc = verify_enclosure(r.ball, ps, {cfg.rel_eps, cfg.abs_eps});
    CommandOutput out;
    out.result = json{{"radius", r.ball.radius},
                      {"center", point_json(r.ball.center)},
                      {"support", r.support},
                      {"iterations", r.iterations},
                      {"max_violation", enc.max_violation}};
    return out;
}

CommandOutput run_diameter(const RunConfig&, const PointSet& ps) {
    const DiameterResult d = diameter(ps);
    CommandOutput out;
    out.result = json{{"diameter", d.value},
                      {"pair", {d.pair.first, d.pair.second}},
                      {"shortest", d.shortest},
                      {"shortest_pair", {d.shortest_pair.first, d.shortest_pair.second}}};
    return out;
}

CommandOutput run_width(const RunConfig& cfg, const PointSet& ps) {
    const WidthResult w = width(ps, cfg.seed);
    CommandOutput out;
    out.result = json{{"width", w.value}, {"direction", point_json(w.direction)},
                      {"exact", w.exact}};
    return out;
}

json profile_json(const ExtentProfile& p) {
    json j{{"circumradius", p.circumradius},
           {"diameter", p.diameter},
           {"width", p.width},
           {"width_exact", p.width_exact},
           {"diameter_pair", {p.diameter_pair.first, p.diameter_pair.second}},
           {"shortest_pair_distance", p.shortest_pair}};
    if (p.inradius)
        j["inradius"] = *p.inradius;
    else
        j["inradius"] = nullptr;
    return j;
}

CommandOutput run_profile(const RunConfig& cfg, const PointSet& ps) {
    const ExtentProfile p = extent_profile(ps, cfg.seed);
    CommandOutput out;
    out.result = profile_json(p);
    out.reports = eggleston_checks(p);
    return out;
}

CommandOutput run_certify(const RunConfig& cfg, const PointSet& ps) {
    CommandOutput out;
    if (cfg.certify_suite == "jung") {
        out.reports.push_back(jung_check(ps, cfg.seed));
    } else if (cfg.certify_suite == "steinhagen") {
        out.reports.push_back(steinhagen_check(ps, cfg.seed));
    } else if (cfg.certify_suite == "variant-jung") {
        out.reports.push_back(variant_jung_check(ps, cfg.cutoff, cfg.seed));
    } else if (cfg.certify_suite == "eggleston") {
        const ExtentProfile p = extent_profile(ps, cfg.seed);
        out.result = profile_json(p);
        out.reports = eggleston_checks(p);
    } else if (cfg.certify_suite == "perelman-pukhov") {
        auto [outer, inner] = perelman_pukhov_extremes(ps, cfg.seed);
        out.reports.push_back(std::move(outer));
        out.reports.push_back(std::move(inner));
    } else {
        throw DegenerateInput("unknown certify suite '" + cfg.certify_suite + "'");
    }
    return out;
}

CommandOutput run_simplex(const RunConfig&, const PointSet& ps) {
    const Simplex s(ps.points);
    const EnergyProfile e = edge_energies(s);
    const MedianProfile m = median_profile(s);
    const double beta_cir = barycentric_circumradius(s);
    const auto [beta_inr, thickness] = barycentric_inradius_and_thickness(s);

    json medians = json::array();
    for (std::size_t i = 0; i < m.median_lengths.size(); ++i)
        medians.push_back(json{{"length", m.median_lengths[i]},
                               {"vertex_to_barycenter", m.vertex_barycenter_distances[i]},
                               {"face_barycenter", point_json(m.face_barycenters[i])}});
    CommandOutput out;
    out.result = json{{"intrinsic_dim", s.intrinsic_dim()},
                      {"ambient_dim", s.ambient_dim()},
                      {"vertex_energies", e.vertex_energy},
                      {"face_energies", e.face_energy},
                      {"total_energy", e.total_energy},
                      {"barycenter", point_json(m.barycenter)},
                      {"medians", medians},
                      {"barycentric_circumradius", beta_cir},
                      {"barycentric_inradius", beta_inr},
                      {"thickness", thickness},
                      {"diameter", s.diameter()},
                      {"shortest_edge", s.shortest_edge()}};
    return out;
}

CommandOutput run_regular(const RunConfig& cfg) {
    const RegularMeasures m = regular_measures(cfg.dim, cfg.diam);
    CommandOutput out;
    out.result = json{{"dim", cfg.dim},
                      {"diam", cfg.diam},
                      {"circumradius", m.circumradius},
                      {"inradius", m.inradius},
                      {"width", m.width},
                      {"median", m.median_length}};
    return out;
}

CommandOutput run_radii_table(const RunConfig& cfg) {
    PolytopeKind kind;
    if (cfg.polytope == "simplex")
        kind = PolytopeKind::RegularSimplex;
    else if (cfg.polytope == "cube")
        kind = PolytopeKind::Cube;
    else if (cfg.polytope == "cross")
        kind = PolytopeKind::CrossPolytope;
    else
        throw DegenerateInput("unknown polytope kind '" + cfg.polytope + "'");

    json rows = json::array();
    for (std::size_t j = 1; j <= cfg.dim; ++j) {
        const PolytopeRadii r = regular_polytope_radii(kind, cfg.dim, j);
        rows.push_back(json{{"j", j},
                            {"inner", r.inner},
                            {"outer", r.outer},
                            {"warning", r.consistency_note}});
    }
    CommandOutput out;
    out.result = json{{"kind", cfg.polytope}, {"dim", cfg.dim}, {"rows", rows}};
    return out;
}

json certificate_json(const PartitionCertificate& cert) {
    return json{{"parts", cert.parts},
                {"witness", point_json(cert.witness)},
                {"residual", cert.residual},
                {"exhaustive", cert.exhaustive}};
}

CommandOutput run_partition(const RunConfig& cfg, const PointSet& ps) {
    CommandOutput out;
    if (cfg.partition_kind == "radon") {
        out.result = certificate_json(radon_partition(ps));
    } else if (cfg.partition_kind == "tverberg") {
        out.result = certificate_json(tverberg_bruteforce(ps, cfg.parts));
    } else if (cfg.partition_kind == "caratheodory") {
        if (cfg.point_text.empty()) throw DegenerateInput("--point is required");
        const PointSet single = parse_points_text(cfg.point_text);
        const ConvexCombination cc = caratheodory_reduce(ps, single[0]);
        out.result = json{{"indices", cc.indices},
                          {"weights", cc.weights},
                          {"reconstruction_error", cc.reconstruction_error}};
    } else if (cfg.partition_kind == "nd-caratheodory") {
        if (cfg.point_text.empty()) throw DegenerateInput("--point is required");
        const PointSet single = parse_points_text(cfg.point_text);
        const NdCaratheodoryResult r = nd_caratheodory(ps, single[0], cfg.subset);
        out.result = json{{"subset", r.subset},
                          {"achieved_distance", r.achieved_distance},
                          {"bound", r.bound},
                          {"bound_holds", r.achieved_distance <= r.bound + 1e-9}};
    } else if (cfg.partition_kind == "nd-tverberg") {
        const PartitionCertificate cert = nd_tverberg_search(ps, cfg.groups, cfg.seed);
        const double bound = (2.0 + std::sqrt(2.0)) *
                             std::sqrt(static_cast<double>(cfg.groups) /
                                       static_cast<double>(ps.size())) *
                             diameter(ps).value;
        out.result = certificate_json(cert);
        out.result["bound"] = bound;
        out.result["bound_holds"] = cert.residual <= bound + 1e-9;
    } else {
        throw DegenerateInput("unknown partition kind '" + cfg.partition_kind + "'");
    }
    return out;
}

void print_text(std::ostream& out, const RunConfig& cfg, const CommandOutput& co) {
    out << std::setprecision(10) << std::fixed;
    if (cfg.command == "regular") {
        out << "regular simplex d=" << cfg.dim << " diam=" << cfg.diam << "\n";
        out << "  circumradius " << co.result["circumradius"].get<double>() << "\n";
        out << "  inradius     " << co.result["inradius"].get<double>() << "\n";
        out << "  width        " << co.result["width"].get<double>() << "\n";
        out << "  median       " << co.result["median"].get<double>() << "\n";
    } else if (cfg.command == "radii-table") {
        out << cfg.polytope << " radii at circumradius 1, d=" << cfg.dim << "\n";
        for (const auto& row : co.result["rows"]) {
            out << "  j=" << row["j"].get<std::size_t>() << "  inner " << row["inner"].get<double>()
                << "  outer " << row["outer"].get<double>();
            const std::string w = row["warning"].get<std::string>();
            if (!w.empty()) out << "  WARNING: " << w;
            out << "\n";
        }
    } else if (!co.result.is_null()) {
        out << co.result.dump(2) << "\n";
    }
    out << std::defaultfloat << std::setprecision(12);
    for (const BoundReport& r : co.reports) print_report_text(out, r);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        CommandOutput co;
        if (cfg.command == "regular") {
            co = run_regular(cfg);
        } else if (cfg.command == "radii-table") {
            co = run_radii_table(cfg);
        } else {
            if (cfg.input_path.empty()) throw DegenerateInput("--input is required");
            const PointSet ps = parse_points_file(cfg.input_path);
            if (cfg.command == "meb")
                co = run_meb(cfg, ps);
            else if (cfg.command == "diameter")
                co = run_diameter(cfg, ps);
            else if (cfg.command == "width")
                co = run_width(cfg, ps);
            else if (cfg.command == "profile")
                co = run_profile(cfg, ps);
            else if (cfg.command == "certify")
                co = run_certify(cfg, ps);
            else if (cfg.command == "simplex")
                co = run_simplex(cfg, ps);
            else if (cfg.command == "partition")
                co = run_partition(cfg, ps);
            else
                throw DegenerateInput("unknown command '" + cfg.command + "'");
        }

        for (BoundReport& r : co.reports) apply_tolerance(r, cfg.rel_eps);
        bool all_hold = true;
        for (const BoundReport& r : co.reports) all_hold = all_hold && r.holds;

        if (cfg.json) {
            json reports = json::array();
            for (const BoundReport& r : co.reports) reports.push_back(report_json(r));
            const json envelope{{"command", cfg.command},
                                {"input", cfg.input_path},
                                {"result", co.result},
                                {"reports", reports},
                                {"tolerances", {{"rel_eps", cfg.rel_eps}, {"abs_eps", cfg.abs_eps}}},
                                {"seed", cfg.seed}};
            out << dump_json(envelope) << "\n";
        } else {
            print_text(out, cfg, co);
        }
        return all_hold ? 0 : 1;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int main_impl(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"enclosing balls, extent measures and partition certificates"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--input", cfg.input_path, "CSV point file")->required();
        sub->add_flag("--json", cfg.json, "machine-readable output");
        sub->add_option("--seed", cfg.seed, "random seed (default 0)");
        sub->add_option("--rel-eps", cfg.rel_eps, "relative tolerance");
        sub->add_option("--abs-eps", cfg.abs_eps, "absolute tolerance");
        sub->add_option("--cutoff", cfg.cutoff, "subset enumeration cutoff");
    };

    for (const char* name : {"meb", "diameter", "width", "profile", "simplex"})
        add_common(app.add_subcommand(name), true);

    CLI::App* certify = app.add_subcommand("certify");
    certify->add_option("suite", cfg.certify_suite,
                        "jung | steinhagen | variant-jung | eggleston | perelman-pukhov")
        ->required();
    add_common(certify, true);

    CLI::App* partition = app.add_subcommand("partition");
    partition->add_option("kind", cfg.partition_kind,
                          "radon | tverberg | caratheodory | nd-caratheodory | nd-tverberg")
        ->required();
    partition->add_option("--p", cfg.parts, "number of parts (tverberg)");
    partition->add_option("--k", cfg.groups, "number of parts (nd-tverberg)");
    partition->add_option("--r", cfg.subset, "subset size (nd-caratheodory)");
    partition->add_option("--point", cfg.point_text, "query point, comma-separated");
    add_common(partition, true);

    CLI::App* regular = app.add_subcommand("regular");
    regular->add_option("--dim", cfg.dim, "dimension")->required();
    regular->add_option("--diam", cfg.diam, "edge length (default 1)");
    add_common(regular, false);

    CLI::App* radii = app.add_subcommand("radii-table");
    radii->add_option("--kind", cfg.polytope, "simplex | cube | cross");
    radii->add_option("--dim", cfg.dim, "dimension")->required();
    add_common(radii, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return run(cfg, out, err);
}

}  // namespace ballpark::cli
