// SPDX-License-Identifier: MIT
//
// Command-line front end.  Every subcommand is a thin adapter over the
// library: construct and verify tilings, census their incidence graphs,
// enumerate and reconstruct by exhaustive search, print the size-count
// bound table, run the conformance suite, and render to SVG.
//
// Exit codes: 0 success, 1 failed check or failed search, 2 usage error.
// Library errors print {"error":{"code","message"}} on stderr.

#include "tritile/bounds.hpp"
#include "tritile/conformance.hpp"
#include "tritile/constructions.hpp"
#include "tritile/enumerate.hpp"
#include "tritile/incidence.hpp"
#include "tritile/recipes.hpp"
#include "tritile/reconstruct.hpp"
#include "tritile/render.hpp"
#include "tritile/tritile_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace tritile;

#ifndef TRITILE_DATA_DIR
#define TRITILE_DATA_DIR ""
#endif

ShapeClass parse_shape(const std::string& name) {
    static const std::map<std::string, ShapeClass> table = {
        {"triangle", ShapeClass::Triangle},      {"tri", ShapeClass::Triangle},
        {"trapezoid", ShapeClass::Trapezoid},    {"trap", ShapeClass::Trapezoid},
        {"parallelogram", ShapeClass::Parallelogram},
        {"par", ShapeClass::Parallelogram},      {"pentagon", ShapeClass::Pentagon},
        {"pent", ShapeClass::Pentagon},          {"hexagon", ShapeClass::Hexagon},
        {"hex", ShapeClass::Hexagon},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw CLI::ValidationError("--shape", "unknown shape '" + name + "'");
    return it->second;
}

std::vector<ExactScalar> parse_sizes(const std::string& list) {
    std::vector<ExactScalar> out;
    std::string item;
    std::istringstream in(list);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(parse_exact(item));
    if (out.empty()) throw CLI::ValidationError("--sizes", "empty size list");
    return out;
}

json stats_json(const Tiling& t, const VerificationReport& rep) {
    TilingStats st = stats(t);
    json sizes = json::array();
    for (const auto& s : st.sizes) sizes.push_back(exact_str(s));
    json j = {{"valid", rep.valid},  {"shape", shape_name(st.shape)},
              {"n", st.n},           {"s", st.s},
              {"v_pi", st.v_pi},     {"t_perfect", st.t_perfect},
              {"sizes", sizes}};
    if (!rep.valid) {
        j["violation"] = rep.violation;
        if (!rep.detail.empty()) j["detail"] = rep.detail;
    }
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("IoError", "cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

void write_or_print(const Tiling& t, const std::string& out_path,
                    const std::vector<std::string>& comments) {
    if (out_path.empty())
        std::cout << to_text(t);
    else
        write_tritile(out_path, t, comments);
}

int cmd_verify(const std::string& path, bool quiet) {
    Tiling t = read_tritile(path);
    VerificationReport rep = verify(t);
    if (!quiet) std::cout << stats_json(t, rep).dump(2) << "\n";
    return rep.valid ? 0 : 1;
}

int cmd_gamma(const std::string& path) {
    Tiling t = read_tritile(path);
    VerificationReport rep = verify(t);
    if (!rep.valid) throw Error("InvalidTiling", rep.violation + ": " + rep.detail);
    GammaCensus c;
    PairBound b = check_gamma(t, &c);
    json faces = json::object();
    for (const auto& [len, cnt] : c.face_sizes) faces[std::to_string(len)] = cnt;
    json j = {{"v", c.v},
              {"e", c.e},
              {"f", c.f},
              {"whites", c.whites},
              {"blacks", c.blacks},
              {"v2", c.v2},
              {"v3", c.v3},
              {"v6", c.v6},
              {"components", c.components},
              {"outer_len", c.outer_len},
              {"f4_total", c.f4_total},
              {"f4_bounded", c.f4_bounded},
              {"face_sizes", faces},
              {"pairs", b.pairs},
              {"pair_floor", b.lower},
              {"pair_margin", b.pairs - b.lower},
              {"v_pi", c.v_pi},
              {"m", c.m}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_construct(const std::string& kind, int n, const std::string& variant,
                  const std::string& shape_name_arg, const std::string& data_dir,
                  const std::string& out_path) {
    Tiling t = [&] {
        if (kind == "spiral-p") return spiral_pentagon(n);
        if (kind == "q-pent") return q_pentagon(n);
        if (kind == "derived" || kind == "t-derived") {
            if (variant.size() != 1)
                throw Error("UsageError", "--variant must be one of a, b, c, e");
            return kind == "derived" ? derived_polygon(n, variant[0])
                                     : t_derived(n, variant[0]);
        }
        if (kind == "small") return canonical_small(parse_shape(shape_name_arg), n);
        if (kind == "recipe") {
            ShapeClass target = parse_shape(shape_name_arg);
            for (const AttachRecipe& r : attach_recipes())
                if (r.target == target && r.n == n) {
                    Tiling base = load_gallery_file(data_dir, r.base);
                    return recipe_build(base, r);
                }
            throw Error("NoSuchRecipe", "no attachment recipe yields " +
                                            std::string(shape_name(target)) + " with " +
                                            std::to_string(n) + " tiles");
        }
        throw Error("UsageError", "unknown construction kind '" + kind + "'");
    }();
    VerificationReport rep = verify(t);
    write_or_print(t, out_path, {kind + " n=" + std::to_string(n) +
                                 (variant.empty() ? "" : " variant " + variant)});
    if (!out_path.empty()) std::cout << stats_json(t, rep).dump(2) << "\n";
    return rep.valid ? 0 : 1;
}

int cmd_enumerate(const std::string& shape_arg, long long scale, long long max_tiles,
                  bool t_perfect, int jobs, bool stream, double max_seconds,
                  long long max_nodes) {
    ShapeClass shape = parse_shape(shape_arg);
    EnumerateOptions opt;
    opt.scale = scale;
    opt.max_tiles = max_tiles;
    opt.t_perfect_only = t_perfect;
    opt.jobs = jobs;
    opt.budget.max_seconds = max_seconds;
    opt.budget.max_nodes = max_nodes;

    // Counts per (n, s, repeat-free flag) over the raw stream.
    std::map<std::tuple<int, int, bool>, long long> counts;
    opt.observer = [&](const Tiling& t) {
        TilingStats st = stats(t);
        ++counts[{st.n, st.s, st.t_perfect}];
        if (stream) std::cout << to_text(t) << "---\n";
    };
    EnumerationResult res = enumerate_tilings(shape, opt);

    json rows = json::array();
    for (const auto& row : res.rows)
        rows.push_back({{"n", row.n},
                        {"classes", row.classes},
                        {"best_s", row.best_s},
                        {"witness", row.witness_key}});
    json stream_counts = json::array();
    for (const auto& [key, cnt] : counts)
        stream_counts.push_back({{"n", std::get<0>(key)},
                                 {"s", std::get<1>(key)},
                                 {"t_perfect", std::get<2>(key)},
                                 {"count", cnt}});
    json j = {{"shape", shape_name(shape)},
              {"scale", scale},
              {"max_tiles", max_tiles},
              {"t_perfect_only", t_perfect},
              {"complete", res.complete},
              {"nodes", res.nodes},
              {"rows", rows},
              {"counts", stream_counts}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_reconstruct(const std::string& shape_arg, const std::string& sizes_arg,
                    bool t_perfect, bool all_regions, long long max_results,
                    double max_seconds, long long max_nodes,
                    const std::string& out_path) {
    ShapeClass shape = parse_shape(shape_arg);
    std::vector<ExactScalar> sizes = parse_sizes(sizes_arg);
    ReconstructOptions opt;
    opt.t_perfect_only = t_perfect;
    opt.all_regions = all_regions;
    opt.max_results = max_results;
    opt.budget.max_seconds = max_seconds;
    opt.budget.max_nodes = max_nodes;
    ReconstructResult res = reconstruct_regions(shape, sizes, opt);

    long long found = 0;
    json hits = json::array();
    for (const auto& hit : res.hits) {
        json sides = json::array();
        for (const auto& s : hit.region.side_lengths()) sides.push_back(exact_str(s));
        hits.push_back({{"sides", sides},
                        {"tilings", hit.found.tilings.size()},
                        {"complete", hit.found.complete}});
        for (const Tiling& t : hit.found.tilings) {
            ++found;
            if (out_path.empty())
                std::cout << to_text(t) << "---\n";
            else if (found == 1)
                write_tritile(out_path, t, {"reconstructed from sizes " + sizes_arg});
        }
    }
    json j = {{"shape", shape_name(shape)},
              {"found", found},
              {"candidates", res.candidates},
              {"complete", res.complete},
              {"nodes", res.nodes},
              {"hits", hits}};
    std::cout << j.dump(2) << "\n";
    return found > 0 ? 0 : 1;
}

const char* membership_name(Membership m) {
    switch (m) {
        case Membership::In: return "in";
        case Membership::Out: return "out";
        default: return "unknown";
    }
}

int cmd_bounds(const std::string& shape_arg, int n, int to, bool unique_pairs) {
    ShapeClass shape = parse_shape(shape_arg);
    auto entry_json = [&](int k) {
        BoundEntry e = expected_bounds(shape, k, unique_pairs);
        json j = {{"n", k}, {"member", membership_name(e.member)}};
        if (e.member == Membership::In) {
            j["s_lo"] = e.s_lo;
            j["s_hi"] = e.s_hi;
        }
        return j;
    };
    json j = {{"shape", shape_name(shape)}, {"unique_pairs", unique_pairs}};
    if (to > 0) {
        json rows = json::array();
        for (int k = 1; k <= to; ++k) rows.push_back(entry_json(k));
        j["rows"] = rows;
    } else {
        j["entry"] = entry_json(n);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

json section_json(const ConformanceSection& s) {
    return {{"name", s.name},           {"pass", s.pass},
            {"complete", s.complete},   {"checked", s.checked},
            {"violations", s.violations}, {"notes", s.notes},
            {"seconds", s.seconds}};
}

int cmd_check(const ConformanceOptions& opt, const std::string& out_path) {
    ConformanceReport rep = run_conformance(opt, &std::cerr);
    json sections = json::array();
    for (const auto& s : rep.sections) sections.push_back(section_json(s));
    json j = {{"pass", rep.pass},
              {"complete", rep.complete},
              {"seconds", rep.seconds},
              {"sections", sections}};
    emit(j, out_path);
    return rep.pass ? 0 : 1;
}

int cmd_render(const std::string& path, const std::string& out_path, double px,
               double stroke, bool labels) {
    Tiling t = read_tritile(path);
    VerificationReport rep = verify(t);
    if (!rep.valid) throw Error("InvalidTiling", rep.violation + ": " + rep.detail);
    RenderStyle style;
    style.px_per_unit = px;
    style.stroke_width = stroke;
    style.labels = labels;
    std::string svg = render_svg(t, style);
    if (out_path.empty()) {
        std::cout << svg;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("IoError", "cannot write " + out_path);
        out << svg;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tilings of convex lattice polygons by lattice triangles"};
    app.require_subcommand(1);

    std::string file, out_path, shape_arg = "hexagon", sizes_arg, kind, variant;
    std::string data_dir = TRITILE_DATA_DIR;
    bool quiet = false, t_perfect = false, stream = false, all_regions = false;
    bool labels = false, unique_pairs = false;
    int n = 0, to = 0, jobs = 1;
    long long scale = 6, max_tiles = 8, max_results = 1, max_nodes = -1;
    double max_seconds = -1, px = 40.0, stroke = 1.0;

    auto* c_verify = app.add_subcommand("verify", "Check a tiling file and print its stats");
    c_verify->add_option("file", file)->required();
    c_verify->add_flag("-q,--quiet", quiet, "suppress the stats report");

    auto* c_stats = app.add_subcommand("stats", "Print shape, n, s, and the size multiset");
    c_stats->add_option("file", file)->required();

    auto* c_gamma = app.add_subcommand("gamma", "Census of the tile-vertex incidence graph");
    c_gamma->add_option("file", file)->required();

    auto* c_construct = app.add_subcommand("construct", "Build a named tiling family member");
    c_construct->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"spiral-p", "q-pent", "derived", "t-derived", "small",
                               "recipe"}));
    c_construct->add_option("--n", n)->required();
    c_construct->add_option("--variant", variant, "a, b, c, or e");
    c_construct->add_option("--shape", shape_arg);
    c_construct->add_option("--data", data_dir, "directory with hexagons/<letter>.tritile");
    c_construct->add_option("-o,--out", out_path);

    auto* c_enum = app.add_subcommand("enumerate", "Sweep all regions up to a size cap");
    c_enum->add_option("--shape", shape_arg)->required();
    c_enum->add_option("--scale", scale);
    c_enum->add_option("--max-tiles", max_tiles);
    c_enum->add_flag("--t-perfect", t_perfect, "repeat-free tilings only");
    c_enum->add_option("--jobs", jobs);
    c_enum->add_flag("--stream", stream, "print each tiling, separated by ---");
    c_enum->add_option("--max-seconds", max_seconds);
    c_enum->add_option("--max-nodes", max_nodes);

    auto* c_recon = app.add_subcommand("reconstruct",
                                       "Find regions tiled by an exact size multiset");
    c_recon->add_option("--shape", shape_arg)->required();
    c_recon->add_option("--sizes", sizes_arg, "comma-separated size list")->required();
    c_recon->add_flag("--t-perfect", t_perfect, "repeat-free tilings only");
    c_recon->add_flag("--all-regions", all_regions);
    c_recon->add_option("--max-results", max_results);
    c_recon->add_option("--max-seconds", max_seconds);
    c_recon->add_option("--max-nodes", max_nodes);
    c_recon->add_option("-o,--out", out_path, "write the first tiling here");

    auto* c_bounds = app.add_subcommand("bounds",
                                        "Achievability and distinct-size bound table");
    c_bounds->add_option("--shape", shape_arg)->required();
    c_bounds->add_option("--n", n);
    c_bounds->add_option("--to", to, "print rows for n = 1..N");
    c_bounds->add_flag("--unique-pairs", unique_pairs,
                       "bounds for all-sizes-and-directions-distinct tilings");

    ConformanceOptions conf;
    conf.data_dir = data_dir;
    auto* c_check = app.add_subcommand("check-theorems", "Run the conformance suite");
    c_check->add_option("--scale", conf.scale);
    c_check->add_option("--max-tiles", conf.max_tiles);
    c_check->add_option("--unique-scale", conf.unique_scale);
    c_check->add_option("--unique-max-tiles", conf.unique_max_tiles);
    c_check->add_option("--jobs", conf.jobs);
    c_check->add_option("--data", conf.data_dir);
    c_check->add_flag("--resolve-gallery", conf.resolve_gallery,
                      "re-derive each gallery row from its size multiset");
    c_check->add_option("--row-seconds", conf.gallery_row_seconds,
                        "budget per resolved gallery row");
    c_check->add_option("--max-seconds", conf.scan_budget.max_seconds,
                        "budget per enumeration scan");
    bool no_scan = false, no_unique = false, no_oracle = false, no_det = false;
    c_check->add_flag("--no-scan", no_scan);
    c_check->add_flag("--no-unique-scan", no_unique);
    c_check->add_flag("--no-oracle", no_oracle);
    c_check->add_flag("--no-determinism", no_det);
    c_check->add_option("-o,--out", out_path, "write the JSON report here");

    auto* c_render = app.add_subcommand("render", "Render a tiling file to SVG");
    c_render->add_option("file", file)->required();
    c_render->add_option("-o,--out", out_path);
    c_render->add_option("--px-per-unit", px);
    c_render->add_option("--stroke", stroke);
    c_render->add_flag("--labels", labels, "print sizes inside the larger tiles");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_verify)) return cmd_verify(file, quiet);
        if (app.got_subcommand(c_stats)) return cmd_verify(file, false);
        if (app.got_subcommand(c_gamma)) return cmd_gamma(file);
        if (app.got_subcommand(c_construct))
            return cmd_construct(kind, n, variant, shape_arg, data_dir, out_path);
        if (app.got_subcommand(c_enum))
            return cmd_enumerate(shape_arg, scale, max_tiles, t_perfect, jobs, stream,
                                 max_seconds, max_nodes);
        if (app.got_subcommand(c_recon))
            return cmd_reconstruct(shape_arg, sizes_arg, t_perfect, all_regions,
                                   max_results, max_seconds, max_nodes, out_path);
        if (app.got_subcommand(c_bounds)) return cmd_bounds(shape_arg, n, to, unique_pairs);
        if (app.got_subcommand(c_check)) {
            conf.with_scan = !no_scan;
            conf.with_unique_scan = !no_unique;
            conf.with_oracle = !no_oracle;
            conf.with_determinism = !no_det;
            return cmd_check(conf, out_path);
        }
        if (app.got_subcommand(c_render)) return cmd_render(file, out_path, px, stroke, labels);
    } catch (const Error& e) {
        std::cerr << json{{"error", {{"code", e.code}, {"message", e.what()}}}}.dump()
                  << "\n";
        return e.code == "UsageError" ? 2 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << json{{"error", {{"code", "UsageError"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"code", "InternalError"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 1;
    }
    return 2;
}
