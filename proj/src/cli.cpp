#include "tropiball/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropiball/balls.hpp"
#include "tropiball/core.hpp"
#include "tropiball/hull.hpp"
#include "tropiball/io.hpp"
#include "tropiball/parallel.hpp"
#include "tropiball/sampler.hpp"
#include "tropiball/simplicial.hpp"
#include "tropiball/version.hpp"
#include "tropiball/volume.hpp"

namespace tropiball {

namespace {

using nlohmann::json;

struct StochasticParams {
    long long samples = 0;
    std::uint64_t seed = 0;
    int burn_in = 100;
    int thinning = 1;
    bool round = false;
    bool direct = false;
    int shards = 0;
};

json base_manifest(const std::string& command, const StochasticParams& p,
                   const json& polytopeDoc) {
    json m;
    m["version"] = kVersion;
    m["command"] = command;
    m["rng"] = Rng::kAlgorithm;
    m["seed"] = p.seed;
    m["samples"] = p.samples;
    m["burn_in"] = p.burn_in;
    m["thinning"] = p.thinning;
    m["round"] = p.round;
    m["direct"] = p.direct;
    m["shards"] = p.shards;
    m["tolerances"] = {{"membership", kDefaultTol}, {"boundary", kDefaultTol}};
    m["threads"] = max_worker_threads();
    m["polytope"] = polytopeDoc;
    return m;
}

StochasticParams params_from_manifest(const json& m) {
    StochasticParams p;
    p.samples = m.at("samples").get<long long>();
    p.seed = m.at("seed").get<std::uint64_t>();
    p.burn_in = m.value("burn_in", 100);
    p.thinning = m.value("thinning", 1);
    p.round = m.value("round", false);
    p.direct = m.value("direct", false);
    p.shards = m.value("shards", 0);
    return p;
}

json tdet_result(const TropPolytope& P) {
    if (P.size() != P.dim()) {
        throw NotASimplex("tdet needs a square vertex matrix (|V| == e)");
    }
    const TdetResult det = trop_det(TropMatrix::from_columns(P.vertices()));
    json sigma = json::array();
    for (int s : det.sigma) sigma.push_back(s + 1);
    return json{{"value", det.singular && det.value == kNegInf ? json("-inf") : json_number(det.value)},
                {"sigma", sigma},
                {"singular", det.singular}};
}

json hrep_result(const TropPolytope& P) {
    const KleeneStar ks = kleene_star(P.vertices());
    const HRep rep = h_rep(ks);
    json star = json::array();
    for (int i = 0; i < ks.e(); ++i) {
        json row = json::array();
        for (int j = 0; j < ks.e(); ++j) row.push_back(json_number(ks.m(i, j)));
        star.push_back(std::move(row));
    }
    json sigma = json::array();
    for (int s : ks.sigma) sigma.push_back(s + 1);
    json cons = json::array();
    for (const HRepConstraint& c : rep.constraints) {
        std::ostringstream text;
        text << "y" << (c.j + 1) << " - y" << (c.i + 1) << " <= " << format12(c.bound);
        cons.push_back(json{{"i", c.i + 1},
                            {"j", c.j + 1},
                            {"bound", json_number(c.bound)},
                            {"text", text.str()}});
    }
    return json{{"e", rep.e},
                {"sigma", sigma},
                {"kleene_star", star},
                {"constraints", cons},
                {"gauge", "y1 = 0"}};
}

json maxball_result(const TropPolytope& P) {
    const TropBall ball = max_inscribed(P);
    const TropPolytope gens = ball_generators(ball, P.dim());
    Scalar residual = 0.0;
    for (const TropPoint& g : gens.vertices()) {
        residual = std::max(residual, trop_dist(g, project(P, g)));
    }
    return json{{"radius", json_number(ball.radius)},
                {"center", json_point(ball.center)},
                {"feasibility_residual", json_number(residual)}};
}

json minball_result(const TropPolytope& P) {
    const TropBall ball = min_enclosing(P);
    Scalar maxDist = 0.0;
    for (const TropPoint& v : P.vertices()) {
        maxDist = std::max(maxDist, trop_dist(ball.center, v));
    }
    return json{{"radius", json_number(ball.radius)},
                {"center", json_point(ball.center)},
                {"max_vertex_distance", json_number(maxDist)},
                {"feasibility_residual", json_number(std::max(0.0, maxDist - ball.radius))}};
}

json pseudo_result(const TropPolytope& P) {
    const PseudoVertexSet pv = enumerate_pseudo_vertices(P);
    const int e = P.dim();
    json matrix = json::array();
    for (int i = 0; i < e; ++i) {
        json row = json::array();
        for (const TropPoint& p : pv.points) row.push_back(json_number(p[i]));
        matrix.push_back(std::move(row));
    }
    return json{{"e", e}, {"count", pv.points.size()}, {"matrix", matrix}};
}

json volume_result(const TropPolytope& P, const StochasticParams& p) {
    VolumeOptions opts;
    opts.burn_in = p.burn_in;
    opts.thinning = p.thinning;
    opts.direct = p.direct;
    opts.shards = p.shards;

    json extra;
    VolumeEstimate est;
    if (p.round) {
        const PseudoVertexSet pv = enumerate_pseudo_vertices(P);
        const TropBall rounded = round_polytope(P);
        est = estimate_volume_rounded(P, p.samples, p.seed, opts);
        extra["rounding"] = json{{"pseudo_vertex_count", pv.points.size()},
                                 {"radius", json_number(rounded.radius)}};
    } else {
        est = estimate_volume(P, p.samples, p.seed, opts);
    }

    json j{{"samples", est.samples},
           {"hits", est.hits},
           {"p", json_number(est.p)},
           {"enclosing_radius", json_number(est.enclosing_radius)},
           {"enclosing_volume", json_number(est.enclosing_volume)},
           {"inscribed_radius", json_number(est.inscribed_radius)},
           {"estimate", json_number(est.estimate)},
           {"lower_bound", json_number(est.lower_bound)},
           {"upper_bound", json_number(est.upper_bound)},
           {"std_error3", json_number(est.std_error3)},
           {"acceptance_rate_bound",
            json_number(acceptance_rate_bound(est.inscribed_radius, est.enclosing_radius, P.dim()))},
           {"seed", est.seed},
           {"burn_in", est.burn_in},
           {"thinning", est.thinning},
           {"direct", est.direct},
           {"rounded", est.rounded},
           {"rng", Rng::kAlgorithm},
           {"shard_seeds", est.shard_seeds}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    return j;
}

json cover_result(const TropPolytope& P, const StochasticParams& p) {
    CoverOptions opts;
    opts.burn_in = p.burn_in;
    opts.thinning = p.thinning;
    const SimplexCover cover = identify_cover(P, p.samples, p.seed, opts);
    json j = cover_to_json(cover);
    j["e"] = P.dim();
    j["burn_in"] = p.burn_in;
    j["thinning"] = p.thinning;
    j["rng"] = Rng::kAlgorithm;
    return j;
}

std::string sample_csv(const TropPolytope& P, const StochasticParams& p,
                       const std::optional<SimplexCover>& cover) {
    CoverOptions opts;
    opts.burn_in = p.burn_in;
    opts.thinning = p.thinning;
    std::vector<TropPoint> pts;
    if (cover) {
        pts = uniform_sample(*cover, P, p.samples, p.seed, opts);
    } else {
        if (P.size() != P.dim()) {
            throw NotASimplex("sampling without --cover needs a tropical simplex; run `cover` first");
        }
        const TropBall inscribed = max_inscribed_simplex(P);
        HarChain chain(P, inscribed.center, p.seed);
        for (int b = 0; b < p.burn_in; ++b) chain.step();
        pts.reserve(static_cast<std::size_t>(p.samples));
        for (long long k = 0; k < p.samples; ++k) {
            TropPoint x = chain.step();
            for (int t = 1; t < p.thinning; ++t) x = chain.step();
            pts.push_back(std::move(x));
        }
    }
    return points_to_csv(pts);
}

std::vector<TropPoint> parse_csv_points(const std::string& text, int e) {
    std::vector<TropPoint> pts;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Scalar> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (...) {
                throw ParseError("CSV cell is not a number: " + cell);
            }
        }
        if (static_cast<int>(row.size()) != e) {
            throw ParseError("CSV row arity does not match the polytope dimension");
        }
        pts.push_back(normalize(row));
    }
    return pts;
}

std::string render_svg(const TropPolytope& P, const std::vector<TropPoint>& pts) {
    // Chart coordinates (y2, y3); polytope edges drawn as tropical segments.
    Scalar xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    std::vector<std::vector<TropPoint>> edges;
    for (int i = 0; i < P.size(); ++i) {
        for (int j = i + 1; j < P.size(); ++j) {
            edges.push_back(trop_segment(P.vertex(i), P.vertex(j)).bends);
        }
    }
    auto extend = [&](const TropPoint& p) {
        xmin = std::min(xmin, p[1]);
        xmax = std::max(xmax, p[1]);
        ymin = std::min(ymin, p[2]);
        ymax = std::max(ymax, p[2]);
    };
    for (const auto& e : edges) {
        for (const auto& b : e) extend(b);
    }
    for (const auto& p : pts) extend(p);
    const Scalar padX = std::max(1e-9, (xmax - xmin) * 0.05);
    const Scalar padY = std::max(1e-9, (ymax - ymin) * 0.05);
    xmin -= padX; xmax += padX; ymin -= padY; ymax += padY;

    const double W = 640.0, H = 640.0;
    auto mapx = [&](Scalar x) { return (x - xmin) / (xmax - xmin) * W; };
    auto mapy = [&](Scalar y) { return H - (y - ymin) / (ymax - ymin) * H; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& e : edges) {
        svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (k) svg << ' ';
            svg << format12(mapx(e[k][1])) << ',' << format12(mapy(e[k][2]));
        }
        svg << "\"/>\n";
    }
    for (const auto& p : pts) {
        svg << "<circle cx=\"" << format12(mapx(p[1])) << "\" cy=\"" << format12(mapy(p[2]))
            << "\" r=\"1.5\" fill=\"#555555\" fill-opacity=\"0.55\"/>\n";
    }
    for (const auto& v : P.vertices()) {
        svg << "<circle cx=\"" << format12(mapx(v[1])) << "\" cy=\"" << format12(mapy(v[2]))
            << "\" r=\"3.5\" fill=\"black\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit(std::ostream& out, const std::string& path, const std::string& content) {
    if (path.empty()) {
        out << content;
    } else {
        write_file(path, content);
    }
}

std::string default_manifest_path(const std::string& command, const std::string& outPath) {
    if (!outPath.empty()) return outPath + ".manifest.json";
    return command + ".manifest.json";
}

// Executes one stochastic command described by a manifest; returns the bytes
// of the primary output (CSV for sample, JSON text otherwise).
std::string run_from_manifest(const json& m) {
    const std::string command = m.at("command").get<std::string>();
    const StochasticParams p = params_from_manifest(m);
    const PolytopeFile pf = parse_polytope(m.at("polytope"));
    if (command == "volume") {
        return volume_result(pf.polytope, p).dump(2) + "\n";
    }
    if (command == "cover") {
        return cover_result(pf.polytope, p).dump(2) + "\n";
    }
    if (command == "sample") {
        std::optional<SimplexCover> cover;
        if (m.contains("cover")) cover = cover_from_json(m.at("cover"));
        return sample_csv(pf.polytope, p, cover);
    }
    throw ParseError("manifest has unknown command: " + command);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tropical polytope balls, volume estimation, and uniform sampling"};
    app.require_subcommand(1);

    std::string file, outPath, manifestPath, coverPath, polytopePath;
    StochasticParams sp;

    auto addStochastic = [&](CLI::App* cmd, const char* countName) {
        cmd->add_option(countName, sp.samples)->required();
        cmd->add_option("--seed", sp.seed)->required();
        cmd->add_option("--burn-in", sp.burn_in);
        cmd->add_option("--thinning", sp.thinning);
        cmd->add_option("-o,--output", outPath);
        cmd->add_option("--manifest", manifestPath);
    };

    CLI::App* cTdet = app.add_subcommand("tdet", "tropical determinant of the vertex matrix");
    cTdet->add_option("file", file)->required();

    CLI::App* cHrep = app.add_subcommand("hrep", "Kleene star and half-space system of a simplex");
    cHrep->add_option("file", file)->required();

    CLI::App* cMaxball = app.add_subcommand("maxball", "maximum inscribed tropical ball");
    cMaxball->add_option("file", file)->required();

    CLI::App* cMinball = app.add_subcommand("minball", "minimum enclosing tropical ball");
    cMinball->add_option("file", file)->required();

    CLI::App* cVolume = app.add_subcommand("volume", "Monte-Carlo volume estimate");
    cVolume->add_option("file", file)->required();
    addStochastic(cVolume, "--samples");
    cVolume->add_flag("--round", sp.round, "round the simplex before sampling");
    cVolume->add_flag("--direct", sp.direct, "i.i.d. ball sampling instead of Hit-and-Run");
    cVolume->add_option("--shards", sp.shards);

    CLI::App* cPseudo = app.add_subcommand("pseudo", "pseudo-vertices of the (e-1)-trunk");
    cPseudo->add_option("file", file)->required();

    CLI::App* cCover = app.add_subcommand("cover", "covering simplices with mixture weights");
    cCover->add_option("file", file)->required();
    addStochastic(cCover, "--samples");

    CLI::App* cSample = app.add_subcommand("sample", "sample points from the (e-1)-trunk");
    cSample->add_option("file", file)->required();
    addStochastic(cSample, "--points");
    cSample->add_option("--cover", coverPath, "cover document from the `cover` command");

    CLI::App* cPlot = app.add_subcommand("plot", "SVG scatter of sampled points (e = 3)");
    cPlot->add_option("points", file)->required();
    cPlot->add_option("--polytope", polytopePath)->required();
    cPlot->add_option("-o,--output", outPath)->required();

    CLI::App* cReplay = app.add_subcommand("replay", "re-run a recorded stochastic command");
    cReplay->add_option("manifest", file)->required();
    cReplay->add_option("-o,--output", outPath);

    std::vector<const char*> argv;
    argv.push_back("tropiball");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << json{{"error", {{"code", "UsageError"}, {"message", ex.what()}}}}.dump() << "\n";
        return 2;
    }

    try {
        if (cTdet->parsed()) {
            out << tdet_result(load_polytope(file).polytope).dump(2) << "\n";
        } else if (cHrep->parsed()) {
            out << hrep_result(load_polytope(file).polytope).dump(2) << "\n";
        } else if (cMaxball->parsed()) {
            out << maxball_result(load_polytope(file).polytope).dump(2) << "\n";
        } else if (cMinball->parsed()) {
            out << minball_result(load_polytope(file).polytope).dump(2) << "\n";
        } else if (cPseudo->parsed()) {
            out << pseudo_result(load_polytope(file).polytope).dump(2) << "\n";
        } else if (cVolume->parsed()) {
            const PolytopeFile pf = load_polytope(file);
            json manifest = base_manifest("volume", sp, polytope_to_json(pf.polytope, pf.name));
            emit(out, outPath, volume_result(pf.polytope, sp).dump(2) + "\n");
            write_file(manifestPath.empty() ? default_manifest_path("volume", outPath) : manifestPath,
                       manifest.dump(2) + "\n");
        } else if (cCover->parsed()) {
            const PolytopeFile pf = load_polytope(file);
            json manifest = base_manifest("cover", sp, polytope_to_json(pf.polytope, pf.name));
            emit(out, outPath, cover_result(pf.polytope, sp).dump(2) + "\n");
            write_file(manifestPath.empty() ? default_manifest_path("cover", outPath) : manifestPath,
                       manifest.dump(2) + "\n");
        } else if (cSample->parsed()) {
            const PolytopeFile pf = load_polytope(file);
            json manifest = base_manifest("sample", sp, polytope_to_json(pf.polytope, pf.name));
            std::optional<SimplexCover> cover;
            if (!coverPath.empty()) {
                json coverDoc = json::parse(read_file(coverPath));
                cover = cover_from_json(coverDoc);
                manifest["cover"] = coverDoc;
            }
            emit(out, outPath, sample_csv(pf.polytope, sp, cover));
            write_file(manifestPath.empty() ? default_manifest_path("sample", outPath) : manifestPath,
                       manifest.dump(2) + "\n");
        } else if (cPlot->parsed()) {
            const PolytopeFile pf = load_polytope(polytopePath);
            if (pf.polytope.dim() != 3) {
                throw TropicalError("UnsupportedDimension",
                                    "plot renders e = 3 only; higher dimensions come as CSV data");
            }
            const std::vector<TropPoint> pts = parse_csv_points(read_file(file), 3);
            write_file(outPath, render_svg(pf.polytope, pts));
        } else if (cReplay->parsed()) {
            json manifest = json::parse(read_file(file));
            emit(out, outPath, run_from_manifest(manifest));
        }
    } catch (const TropicalError& ex) {
        err << json{{"error", {{"code", ex.code()}, {"message", ex.what()}}}}.dump() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& ex) {
        err << json{{"error", {{"code", "ParseError"}, {"message", ex.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}

} // namespace tropiball
