#include "cli.hpp"

#include "tconvex/checks.hpp"
#include "tconvex/coarea.hpp"
#include "tconvex/cone_manifold.hpp"
#include "tconvex/errors.hpp"
#include "tconvex/orthoscheme.hpp"
#include "tconvex/polygon.hpp"
#include "tconvex/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace tconvex::cli {

using json = nlohmann::ordered_json;

namespace {

const char* command_name(Command c) {
    switch (c) {
        case Command::polygon: return "polygon";
        case Command::gram: return "gram";
        case Command::orthoscheme: return "orthoscheme";
        case Command::solve: return "solve";
        case Command::cone: return "cone";
        case Command::check: return "check";
    }
    return "?";
}

std::vector<double> as_double_vector(const json& j, const char* key) {
    if (!j.is_array())
        throw std::runtime_error(std::string("config: ") + key +
                                 " must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& el : j) {
        if (!el.is_number())
            throw std::runtime_error(std::string("config: ") + key +
                                     " must contain only numbers");
        out.push_back(el.get<double>());
    }
    return out;
}

} // namespace

void merge_config_file(JobConfig& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("config: cannot open " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("config: top level must be a JSON object");

    if (j.contains("command")) {
        const auto& c = j["command"];
        if (!c.is_string() || c.get<std::string>() != command_name(cfg.command))
            throw std::runtime_error(
                "config: \"command\" disagrees with the invoked subcommand");
    }
    if (j.contains("phis")) cfg.phis = as_double_vector(j["phis"], "phis");
    if (j.contains("hs")) cfg.hs = as_double_vector(j["hs"], "hs");
    if (j.contains("dihedral_sq"))
        cfg.dihedral_sq = as_double_vector(j["dihedral_sq"], "dihedral_sq");
    if (j.contains("periods")) {
        if (!j["periods"].is_number_integer())
            throw std::runtime_error("config: periods must be an integer");
        cfg.periods = j["periods"].get<int>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            throw std::runtime_error("config: seed must be an integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("out_format")) {
        const auto& fmt = j["out_format"];
        if (fmt == "json")
            cfg.out_format = OutFormat::json;
        else if (fmt == "csv")
            cfg.out_format = OutFormat::csv;
        else
            throw std::runtime_error("config: out_format must be json or csv");
    }
    if (j.contains("svg_path")) {
        if (!j["svg_path"].is_string())
            throw std::runtime_error("config: svg_path must be a string");
        cfg.svg_path = j["svg_path"].get<std::string>();
    }
    // Anything else (vertices, coarea, ... from a previous run) is ignored.
}

namespace {

// ---- output helpers -------------------------------------------------------

void emit_csv_value(std::ostream& out, const json& el) {
    if (el.is_string())
        out << el.get<std::string>();
    else
        out << el.dump(); // numbers/bools via shortest round-trip repr
}

// Long format: key,index,value with 1-based indices ("k.j" for nested rows).
void emit_csv(std::ostream& out, const json& j) {
    out << "key,index,value\n";
    for (const auto& [key, val] : j.items()) {
        if (val.is_array()) {
            std::size_t i = 1;
            for (const auto& el : val) {
                if (el.is_array()) {
                    std::size_t k = 1;
                    for (const auto& inner : el) {
                        out << key << ',' << i << '.' << k << ',';
                        emit_csv_value(out, inner);
                        out << '\n';
                        ++k;
                    }
                } else {
                    out << key << ',' << i << ',';
                    emit_csv_value(out, el);
                    out << '\n';
                }
                ++i;
            }
        } else if (!val.is_null()) {
            out << key << ",,";
            emit_csv_value(out, val);
            out << '\n';
        }
    }
}

void emit(std::ostream& out, OutFormat fmt, const json& j) {
    if (fmt == OutFormat::json)
        out << j.dump(2) << "\n";
    else
        emit_csv(out, j);
}

json vec2_json(const LVec& v) { return json::array({v.x1, v.x2}); }

json vecs_json(const std::vector<LVec>& vs) {
    json arr = json::array();
    for (const LVec& v : vs) arr.push_back(vec2_json(v));
    return arr;
}

// ---- command bodies -------------------------------------------------------

int missing(std::ostream& err, const char* cmd, const char* field) {
    err << "config error: " << cmd << " requires " << field << "\n";
    return 2;
}

int run_polygon(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.phis.empty()) return missing(err, "polygon", "phis");
    if (cfg.hs.empty()) return missing(err, "polygon", "hs");
    const PolygonSpec spec(cfg.phis, cfg.hs);
    const PolygonGeometry geo = geometry(spec);
    const TConvexReport conv = is_t_convex(spec);

    json j;
    j["command"] = "polygon";
    j["n"] = spec.n();
    j["t"] = spec.t();
    j["phis"] = cfg.phis;
    j["hs"] = cfg.hs;
    j["formal"] = spec.formal();
    j["t_convex"] = conv.t_convex;
    json off = json::array();
    for (std::size_t i : conv.offending) off.push_back(i + 1);
    j["offending_edges"] = off;
    j["normals"] = vecs_json(geo.normals);
    j["feet"] = vecs_json(geo.feet);
    j["vertices"] = vecs_json(geo.vertices);
    j["half_lengths_fwd"] = geo.half_lengths_fwd;
    j["half_lengths_bwd"] = geo.half_lengths_bwd;
    j["edge_lengths"] = geo.edge_lengths;
    j["coarea_formula"] = coarea_formula(spec);
    if (conv.t_convex)
        j["coarea_geometric"] = coarea_geometric(spec);
    else
        j["coarea_geometric"] = nullptr;
    j["periods"] = cfg.periods;
    if (!cfg.svg_path.empty()) {
        emit_svg(spec, cfg.periods, cfg.svg_path);
        j["svg"] = cfg.svg_path;
    }
    emit(out, cfg.out_format, j);
    return 0;
}

int run_gram(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.phis.empty()) return missing(err, "gram", "phis");
    const GramMatrix g = gram(cfg.phis);
    const DefinitenessReport rep = is_positive_definite(g);

    json j;
    j["command"] = "gram";
    j["n"] = g.n();
    j["phis"] = cfg.phis;
    json rows = json::array();
    for (std::size_t k = 0; k < g.n(); ++k) {
        json row = json::array();
        for (std::size_t c = 0; c < g.n(); ++c) row.push_back(g.at(k, c));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["dominance_margin"] = rep.dominance_margin;
    j["min_pivot"] = rep.min_pivot;
    j["factorization_ok"] = rep.factorization_ok;
    j["positive_definite"] = rep.positive_definite;
    emit(out, cfg.out_format, j);
    return 0;
}

int run_orthoscheme(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.phis.empty()) return missing(err, "orthoscheme", "phis");

    json j;
    j["command"] = "orthoscheme";
    j["n"] = cfg.phis.size();
    j["phis"] = cfg.phis;
    if (cfg.phis.size() == 2) {
        // The unit-coarea slice is an arc; report its length.
        j["arc_theta"] = arc_length_n2(cfg.phis[0], cfg.phis[1]);
    } else {
        const OrthoschemeAngles oa = dihedral_cosines(cfg.phis);
        j["dihedral_cos"] = oa.dihedral_cos;
        json angles = json::array();
        for (double c : oa.dihedral_cos) angles.push_back(std::acos(c));
        j["dihedral_angles"] = std::move(angles);
        json witnesses = json::array();
        for (std::size_t k = 0; k < cfg.phis.size(); ++k) {
            const CrossRatioWitness w = cross_ratio(cfg.phis, k);
            json wj;
            wj["k"] = k + 1;
            wj["lambda"] = w.lambda;
            wj["u"] = w.u;
            wj["identity_gap"] =
                std::abs((w.lambda - 1.0) / w.lambda -
                         oa.dihedral_cos[k] * oa.dihedral_cos[k]);
            witnesses.push_back(std::move(wj));
        }
        j["cross_ratio"] = std::move(witnesses);
    }
    emit(out, cfg.out_format, j);
    return 0;
}

int run_solve(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.dihedral_sq.empty()) return missing(err, "solve", "dihedral_sq");
    const std::vector<double> phis = solve_angles_from_dihedral(cfg.dihedral_sq);
    const OrthoschemeAngles oa = dihedral_cosines(phis);

    json j;
    j["command"] = "solve";
    j["dihedral_sq"] = cfg.dihedral_sq;
    j["phis"] = phis;
    json residuals = json::array();
    double worst = 0.0;
    for (std::size_t k = 0; k < phis.size(); ++k) {
        const double r =
            oa.dihedral_cos[k] * oa.dihedral_cos[k] - cfg.dihedral_sq[k];
        residuals.push_back(r);
        worst = std::max(worst, std::abs(r));
    }
    j["residuals"] = std::move(residuals);
    j["max_residual"] = worst;
    emit(out, cfg.out_format, j);
    return 0;
}

int run_cone(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.phis.empty()) return missing(err, "cone", "phis");
    if (cfg.phis.size() != 3) {
        err << "config error: cone requires exactly 3 angles (the merged triple)\n";
        return 2;
    }
    const ConeAngleReport rep = s_cone_angle(cfg.phis[0], cfg.phis[1], cfg.phis[2]);

    json j;
    j["command"] = "cone";
    j["merged_triple"] = rep.merged_triple;
    j["face_type"] = "S";
    j["theta_sum"] = rep.theta_sum;
    j["theta_closed"] = rep.theta_closed;
    j["cos_half_theta"] = rep.cos_half_theta;
    j["n_face_total_angle"] = n_face_total_angle();
    emit(out, cfg.out_format, j);
    return 0;
}

int run_check(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    CheckOptions opts;
    opts.seed = cfg.seed;
    // The SVG determinism criterion runs in-process here; the standalone
    // acceptance runner drives the real binary.
    const std::vector<CheckResult> results = run_all_checks(opts);
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " - " << r.detail
            << "\n";
        if (r.passed) ++passed;
    }
    out << passed << "/" << results.size() << " checks passed (seed "
        << cfg.seed << ")\n";
    if (passed != results.size()) {
        err << "error: CheckFailed: " << results.size() - passed
            << " criteria failed\n";
        return 1;
    }
    return 0;
}

} // namespace

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::polygon: return run_polygon(cfg, out, err);
            case Command::gram: return run_gram(cfg, out, err);
            case Command::orthoscheme: return run_orthoscheme(cfg, out, err);
            case Command::solve: return run_solve(cfg, out, err);
            case Command::cone: return run_cone(cfg, out, err);
            case Command::check: return run_check(cfg, out, err);
        }
        err << "config error: unknown command\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: Internal: " << e.what() << "\n";
        return 1;
    }
}

int main_impl(int argc, const char* const* argv, std::ostream& out,
              std::ostream& err) {
    CLI::App app{"t-convex polygons of the Lorentz plane: coarea forms, "
                 "orthoschemes, cone angles"};
    app.require_subcommand(1);

    std::string config_path;
    JobConfig cfg;
    std::string format;

    struct SubEntry {
        Command command;
        CLI::App* sub;
    };
    std::vector<SubEntry> subs;
    const auto add_sub = [&](Command c, const char* desc) {
        CLI::App* sub = app.add_subcommand(command_name(c), desc);
        sub->add_option("--config", config_path, "JSON job file");
        sub->add_option("--phis", cfg.phis, "angles (radians)");
        sub->add_option("--hs", cfg.hs, "support numbers");
        sub->add_option("--dihedral-sq", cfg.dihedral_sq,
                        "squared dihedral cosines");
        sub->add_option("--periods", cfg.periods, "plot window (default 3)");
        sub->add_option("--seed", cfg.seed, "property-suite seed");
        sub->add_option("--svg", cfg.svg_path, "SVG output path");
        sub->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        subs.push_back({c, sub});
    };
    add_sub(Command::polygon,
            "vertices, edge lengths, both coarea paths, optional SVG");
    add_sub(Command::gram, "coarea Gram matrix and definiteness report");
    add_sub(Command::orthoscheme,
            "dihedral cosines (n>=3) or the n=2 arc, with cross-ratio witnesses");
    add_sub(Command::solve, "recover angles from squared dihedral cosines");
    add_sub(Command::cone, "cone angle of the face merging a triple of angles");
    add_sub(Command::check, "run the full property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    }

    CLI::App* parsed = nullptr;
    for (const SubEntry& entry : subs)
        if (entry.sub->parsed()) {
            cfg.command = entry.command;
            parsed = entry.sub;
        }
    if (parsed == nullptr) {
        err << "config error: no command given\n";
        return 2;
    }

    // File first, then flags take precedence where both are present.
    if (!config_path.empty()) {
        JobConfig from_file;
        from_file.command = cfg.command;
        try {
            merge_config_file(from_file, config_path);
        } catch (const std::exception& e) {
            err << "config error: " << e.what() << "\n";
            return 2;
        }
        if (parsed->count("--phis") == 0) cfg.phis = from_file.phis;
        if (parsed->count("--hs") == 0) cfg.hs = from_file.hs;
        if (parsed->count("--dihedral-sq") == 0)
            cfg.dihedral_sq = from_file.dihedral_sq;
        if (parsed->count("--periods") == 0) cfg.periods = from_file.periods;
        if (parsed->count("--seed") == 0) cfg.seed = from_file.seed;
        if (parsed->count("--svg") == 0) cfg.svg_path = from_file.svg_path;
        if (parsed->count("--format") == 0) cfg.out_format = from_file.out_format;
    }
    if (!format.empty())
        cfg.out_format = format == "csv" ? OutFormat::csv : OutFormat::json;

    return run(cfg, out, err);
}

} // namespace tconvex::cli
