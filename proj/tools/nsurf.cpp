// nsurf - command line front end for the normal / almost normal surface
// library.
//
// Subcommands: info, equations, enumerate, surfaces, recognize, gen-lens,
// bench.  Every subcommand accepts --json for machine-readable output
// (format_version 1).  Exit codes: 0 success, 1 domain errors (invalid
// input values, unsatisfiable preconditions), 2 I/O and parse errors.

#include "nsurf/coords.hpp"
#include "nsurf/enum_dd.hpp"
#include "nsurf/homology.hpp"
#include "nsurf/lens.hpp"
#include "nsurf/recognize.hpp"
#include "nsurf/skeleton.hpp"
#include "nsurf/surface.hpp"
#include "nsurf/triangulation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace nsurf;

namespace {

constexpr int kFormatVersion = 1;

long long now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

ordered_json json_int_vec(const IntVec& v) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(to_int64(x));
    return a;
}

ordered_json json_int_list(const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (int x : v) a.push_back(x);
    return a;
}

std::string entries_str(const IntVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].str();
    }
    return s;
}

ordered_json json_stats(const std::vector<DDStageStats>& stats) {
    ordered_json a = ordered_json::array();
    for (const DDStageStats& s : stats)
        a.push_back(ordered_json{{"stage", s.stage},
                                 {"rays_in", s.rays_in},
                                 {"rays_kept", s.rays_kept},
                                 {"pairs_tested", s.pairs_tested},
                                 {"millis", s.millis}});
    return a;
}

void print_stats(const std::vector<DDStageStats>& stats) {
    std::cout << "stage  rays_in  rays_kept  pairs_tested  millis\n";
    for (const DDStageStats& s : stats)
        std::cout << s.stage << "  " << s.rays_in << "  " << s.rays_kept
                  << "  " << s.pairs_tested << "  " << s.millis << "\n";
}

ordered_json doc_header(const Triangulation& tri) {
    return ordered_json{{"format_version", kFormatVersion},
                        {"name", tri.name()},
                        {"tetrahedra", tri.size()}};
}

std::string link_kind(const LinkSurface& link) {
    if (link.is_sphere()) return "sphere";
    if (link.is_disc()) return "disc";
    return "other";
}

// ---------------------------------------------------------------- info

int cmd_info(const Triangulation& tri, bool json) {
    const Skeleton sk = build_skeleton(tri);
    const bool closed = tri.is_closed();
    const bool orient = is_orientable(tri);
    int internal_faces = 0, boundary_faces = 0;
    for (const FaceClass& fc : sk.faces())
        (fc.boundary ? boundary_faces : internal_faces)++;
    std::vector<std::string> links;
    for (int vc = 0; vc < sk.vertex_class_count(); ++vc)
        links.push_back(link_kind(sk.link(vc)));
    std::optional<AbelianGroup> h1;
    if (closed) h1 = first_homology(tri);

    if (json) {
        ordered_json doc = doc_header(tri);
        doc["closed"] = closed;
        doc["boundary_faces"] = tri.boundary_face_count();
        doc["orientable"] = orient;
        doc["face_classes"] = sk.face_class_count();
        doc["internal_face_classes"] = internal_faces;
        doc["edge_classes"] = sk.edge_class_count();
        doc["vertex_classes"] = sk.vertex_class_count();
        doc["vertex_links"] = links;
        doc["h1"] = h1 ? ordered_json(h1->str()) : ordered_json(nullptr);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "name: " << tri.name() << "\n"
              << "tetrahedra: " << tri.size() << "\n"
              << "closed: " << (closed ? "yes" : "no");
    if (!closed) std::cout << " (" << tri.boundary_face_count() << " boundary faces)";
    std::cout << "\norientable: " << (orient ? "yes" : "no") << "\n"
              << "face classes: " << sk.face_class_count() << " (internal "
              << internal_faces << ", boundary " << boundary_faces << ")\n"
              << "edge classes: " << sk.edge_class_count() << "\n"
              << "vertex classes: " << sk.vertex_class_count() << "\nvertex links:";
    for (const std::string& s : links) std::cout << " " << s;
    std::cout << "\n";
    if (h1) std::cout << "H1: " << h1->str() << "\n";
    return 0;
}

// ----------------------------------------------------------- equations

int cmd_equations(const Triangulation& tri, CoordSystem system, bool json) {
    const EquationSystem eqs = matching_matrix(tri, system);
    if (json) {
        ordered_json doc = doc_header(tri);
        doc["system"] = system_name(system);
        doc["dimension"] = eqs.dim;
        doc["row_count"] = static_cast<long long>(eqs.rows.size());
        ordered_json rows = ordered_json::array();
        for (const IntVec& r : eqs.rows) rows.push_back(json_int_vec(r));
        doc["rows"] = rows;
        ordered_json prov = ordered_json::array();
        for (const RowProvenance& p : eqs.provenance) {
            ordered_json o;
            if (p.face_class >= 0) o["face_class"] = p.face_class;
            o["edge_class"] = p.edge_class;
            prov.push_back(o);
        }
        doc["provenance"] = prov;
        ordered_json groups = ordered_json::array();
        for (const auto& g : eqs.constraint_groups) groups.push_back(json_int_list(g));
        doc["constraint_groups"] = groups;
        doc["global_octagon_group"] = json_int_list(eqs.global_octagon_group);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "system: " << system_name(system) << "\n"
              << "dimension: " << eqs.dim << "\n"
              << "rows: " << eqs.rows.size() << "\n";
    for (std::size_t r = 0; r < eqs.rows.size(); ++r)
        std::cout << "row " << r << " (" << eqs.provenance[r].str()
                  << "): " << entries_str(eqs.rows[r]) << "\n";
    std::cout << "constraint groups: " << eqs.constraint_groups.size() << "\n";
    if (!eqs.global_octagon_group.empty())
        std::cout << "global octagon group: " << eqs.global_octagon_group.size()
                  << " positions\n";
    return 0;
}

// ----------------------------------------------------------- enumerate

int cmd_enumerate(const Triangulation& tri, CoordSystem system, bool json, int bound) {
    const EquationSystem eqs = matching_matrix(tri, system);
    const RaySet rays = enumerate_vertex_rays(eqs);
    std::optional<std::vector<IntVec>> oracle;
    if (bound >= 0) oracle = brute_force_admissible(eqs, bound);

    if (json) {
        ordered_json doc = doc_header(tri);
        doc["system"] = system_name(system);
        doc["dimension"] = rays.dim;
        doc["ray_count"] = static_cast<long long>(rays.rays.size());
        ordered_json rj = ordered_json::array();
        for (const Ray& r : rays.rays) rj.push_back(json_int_vec(r.entries));
        doc["rays"] = rj;
        doc["stats"] = json_stats(rays.stats);
        if (oracle) {
            ordered_json vecs = ordered_json::array();
            for (const IntVec& v : *oracle) vecs.push_back(json_int_vec(v));
            doc["oracle"] = ordered_json{{"bound", bound},
                                         {"count", static_cast<long long>(oracle->size())},
                                         {"vectors", vecs}};
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "system: " << system_name(system) << "\n"
              << "dimension: " << rays.dim << "\n"
              << "vertex rays: " << rays.rays.size() << "\n";
    for (std::size_t i = 0; i < rays.rays.size(); ++i)
        std::cout << "ray " << i << ": " << entries_str(rays.rays[i].entries) << "\n";
    print_stats(rays.stats);
    if (oracle) {
        std::cout << "admissible vectors with entries bounded by " << bound
                  << ": " << oracle->size() << "\n";
        for (const IntVec& v : *oracle) std::cout << entries_str(v) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ surfaces

const char* verdict_name(AdmissibilityVerdict::Kind k) {
    switch (k) {
    case AdmissibilityVerdict::AdmissibleNormal: return "normal";
    case AdmissibilityVerdict::AdmissibleAlmostNormal: return "almost-normal";
    default: return "inadmissible";
    }
}

int cmd_surfaces(const Triangulation& tri, CoordSystem system, bool json) {
    const EquationSystem eqs = matching_matrix(tri, system);
    const RaySet rays = enumerate_vertex_rays(eqs);

    ordered_json out_rays = ordered_json::array();
    std::size_t index = 0;
    for (const Ray& r : rays.rays) {
        CoordVector rv;
        rv.system = system;
        rv.entries = r.entries;
        const AdmissibilityVerdict verdict = check_admissible(rv, tri);

        ordered_json rec;
        rec["ray"] = json_int_vec(r.entries);
        rec["admissible"] = verdict.admissible() ? ordered_json(verdict_name(verdict.kind))
                                                 : ordered_json(nullptr);
        if (!json) {
            std::cout << "ray " << index << ": " << entries_str(r.entries) << "\n";
            std::cout << "  admissible: "
                      << (verdict.admissible() ? verdict_name(verdict.kind) : "no")
                      << "\n";
        }
        if (!verdict.admissible()) {
            rec["reason"] = verdict.reason;
            if (!json) std::cout << "  reason: " << verdict.reason << "\n";
        } else {
            const CoordVector lift = an_std_form(rv, tri);
            const CellComplex cx = build_cell_complex(lift, tri);
            const SurfaceReport report = components(cx);
            rec["an_std"] = json_int_vec(lift.entries);
            rec["edge_weights"] = json_int_vec(report.total_edge_weights);
            ordered_json comps = ordered_json::array();
            for (const ComponentSummary& c : report.components)
                comps.push_back(ordered_json{
                    {"vector", json_int_vec(c.vector.entries)},
                    {"chi", to_int64(c.chi)},
                    {"octagons", to_int64(c.octagons)},
                    {"vertex_link", c.is_vertex_link},
                    {"class", surface_class_name(c.cls)}});
            rec["components"] = comps;
            if (!json) {
                std::cout << "  components: " << report.components.size()
                          << "; edge weights: " << entries_str(report.total_edge_weights)
                          << "\n";
                for (std::size_t ci = 0; ci < report.components.size(); ++ci) {
                    const ComponentSummary& c = report.components[ci];
                    std::cout << "  component " << ci << ": chi=" << c.chi.str()
                              << " octagons=" << c.octagons.str()
                              << " class=" << surface_class_name(c.cls) << "\n";
                }
            }
        }
        out_rays.push_back(rec);
        ++index;
    }
    if (json) {
        ordered_json doc = doc_header(tri);
        doc["system"] = system_name(system);
        doc["ray_count"] = static_cast<long long>(rays.rays.size());
        doc["rays"] = out_rays;
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------- recognize

int cmd_recognize(const Triangulation& tri, bool json) {
    const RecognitionOutcome out = recognize_sphere(tri);
    const char* verdict = out.verdict == RecognitionOutcome::Sphere ? "Sphere"
                          : out.verdict == RecognitionOutcome::NotSphere ? "NotSphere"
                                                                         : "Inconclusive";
    if (json) {
        ordered_json doc = doc_header(tri);
        doc["verdict"] = verdict;
        doc["reason"] = out.reason;
        doc["multi_vertex_shortcut"] = out.multi_vertex_shortcut;
        doc["diagnostics"] = ordered_json{
            {"orientable", out.orientable},
            {"h1", out.h1.str()},
            {"zero_efficient",
             out.zero_efficient ? ordered_json(*out.zero_efficient) : ordered_json(nullptr)},
            {"vertex_count", out.vertex_count}};
        if (out.certificate) {
            doc["certificate"] =
                ordered_json{{"quad_oct", json_int_vec(out.certificate->entries)},
                             {"joint", json_int_vec(to_joint(*out.certificate).entries)}};
        } else {
            doc["certificate"] = nullptr;
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "verdict: " << verdict << "\n";
    if (!out.reason.empty()) std::cout << "reason: " << out.reason << "\n";
    std::cout << "vertices: " << out.vertex_count << "\n"
              << "orientable: " << (out.orientable ? "yes" : "no") << "\n"
              << "H1: " << out.h1.str() << "\n";
    if (out.zero_efficient)
        std::cout << "0-efficient: " << (*out.zero_efficient ? "yes" : "no") << "\n";
    if (out.multi_vertex_shortcut)
        std::cout << "multi-vertex shortcut: yes\n";
    if (out.certificate) {
        std::cout << "certificate (quad-oct): " << entries_str(out.certificate->entries)
                  << "\n"
                  << "certificate (joint): "
                  << entries_str(to_joint(*out.certificate).entries) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ gen-lens

int cmd_gen_lens(long p, long q, const std::string& out_path, bool json) {
    const Triangulation tri = make_layered_lens_space(p, q);
    std::ofstream out(out_path);
    if (!out) throw ParseError(0, "cannot open output file: " + out_path);
    out << tri.to_text();
    out.close();
    if (!out) throw ParseError(0, "cannot write output file: " + out_path);
    if (json) {
        ordered_json doc = doc_header(tri);
        doc["p"] = p;
        doc["q"] = q;
        doc["path"] = out_path;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "wrote " << tri.name() << " (" << tri.size() << " tetrahedra) to "
              << out_path << "\n";
    return 0;
}

// --------------------------------------------------------------- bench

struct BenchRun {
    CoordSystem system = CoordSystem::AN_STD;
    int dim = 0;
    long long ray_count = 0;
    long long millis = 0;
    std::vector<DDStageStats> stats;
    std::optional<bool> almost_normal_sphere;  // nullopt: too large to check
};

BenchRun bench_one(const Triangulation& tri, CoordSystem system) {
    BenchRun run;
    run.system = system;
    const long long t0 = now_ms();
    const EquationSystem eqs = matching_matrix(tri, system);
    const RaySet rays = enumerate_vertex_rays(eqs);
    run.millis = now_ms() - t0;
    run.dim = rays.dim;
    run.ray_count = static_cast<long long>(rays.rays.size());
    run.stats = rays.stats;

    const StarPartition part = apply_star_filter(rays);
    bool exists = false;
    bool known = true;
    for (const Ray& r : part.almost_normal) {
        CoordVector rv;
        rv.system = system;
        rv.entries = r.entries;
        try {
            const CellComplex cx = build_cell_complex(an_std_form(rv, tri), tri);
            for (const ComponentSummary& c : components(cx).components)
                if (c.cls == SurfaceClass::AlmostNormalSphere) exists = true;
        } catch (const std::domain_error&) {
            known = false;  // surface too large to materialize
        }
        if (exists) break;
    }
    if (exists || known) run.almost_normal_sphere = exists;
    return run;
}

int cmd_bench(const Triangulation& tri, bool json) {
    const char* note =
        "benchmark fixtures are layered lens spaces; census homology-sphere "
        "triangulations are not bundled";
    const BenchRun full = bench_one(tri, CoordSystem::AN_STD);
    const BenchRun reduced = bench_one(tri, CoordSystem::QUAD_OCT);
    const double speedup = static_cast<double>(full.millis) /
                           static_cast<double>(std::max<long long>(1, reduced.millis));
    const bool comparable = full.almost_normal_sphere && reduced.almost_normal_sphere;
    const bool agree =
        comparable && *full.almost_normal_sphere == *reduced.almost_normal_sphere;

    if (json) {
        ordered_json doc = doc_header(tri);
        doc["note"] = note;
        ordered_json runs = ordered_json::array();
        for (const BenchRun* r : {&full, &reduced})
            runs.push_back(ordered_json{
                {"system", system_name(r->system)},
                {"dimension", r->dim},
                {"ray_count", r->ray_count},
                {"millis", r->millis},
                {"stages", json_stats(r->stats)},
                {"almost_normal_sphere", r->almost_normal_sphere
                                             ? ordered_json(*r->almost_normal_sphere)
                                             : ordered_json(nullptr)}});
        doc["runs"] = runs;
        doc["speedup_ratio"] = speedup;
        doc["verdicts_agree"] =
            comparable ? ordered_json(agree) : ordered_json(nullptr);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "bench " << tri.name() << " (" << tri.size() << " tetrahedra)\n"
              << "note: " << note << "\n";
    for (const BenchRun* r : {&full, &reduced}) {
        std::cout << system_name(r->system) << ": dimension " << r->dim << ", rays "
                  << r->ray_count << ", " << r->millis << " ms";
        if (r->almost_normal_sphere)
            std::cout << ", almost-normal sphere: "
                      << (*r->almost_normal_sphere ? "yes" : "no");
        std::cout << "\n";
    }
    std::cout << "speedup (an-std / quad-oct): " << speedup << "\n";
    if (comparable)
        std::cout << "existence verdicts agree: " << (agree ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normal and octagonal almost normal surfaces on triangulated 3-manifolds"};
    app.require_subcommand(1);
    app.fallthrough();
    long long seed = 0;
    app.add_option("--seed", seed, "random seed (reserved; the tool is deterministic)");

    std::string path, out_path, system_str = "std";
    bool json = false;
    int bound = -1;
    long p = 0, q = 0;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", path, "triangulation file")->required();
        sub->add_flag("--json", json, "machine-readable output");
    };
    auto add_system = [&](CLI::App* sub) {
        sub->add_option("--system", system_str,
                        "coordinate system: std, quad, an-std, quad-oct, joint")
            ->default_str("std");
    };

    CLI::App* c_info = app.add_subcommand("info", "triangulation summary");
    add_file(c_info);

    CLI::App* c_eq = app.add_subcommand("equations", "print the matching equations");
    add_file(c_eq);
    add_system(c_eq);

    CLI::App* c_enum =
        app.add_subcommand("enumerate", "enumerate the admissible vertex rays");
    add_file(c_enum);
    add_system(c_enum);
    c_enum->add_option("--bound", bound,
                       "also list all admissible vectors with entries bounded by N");

    CLI::App* c_surf = app.add_subcommand(
        "surfaces", "reconstruct and classify the vertex ray surfaces");
    add_file(c_surf);
    add_system(c_surf);

    CLI::App* c_rec = app.add_subcommand(
        "recognize", "decide whether a closed triangulation is the 3-sphere");
    add_file(c_rec);

    CLI::App* c_lens =
        app.add_subcommand("gen-lens", "generate a layered lens space L(p,q)");
    c_lens->add_option("p", p, "order of the fundamental group")->required();
    c_lens->add_option("q", q, "twisting parameter")->required();
    c_lens->add_option("out", out_path, "output triangulation file")->required();
    c_lens->add_flag("--json", json, "machine-readable output");

    CLI::App* c_bench = app.add_subcommand(
        "bench", "compare quad-octagon against standard almost normal enumeration");
    add_file(c_bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_lens->parsed()) return cmd_gen_lens(p, q, out_path, json);
        const Triangulation tri = load_triangulation(path);
        if (c_info->parsed()) return cmd_info(tri, json);
        if (c_eq->parsed()) return cmd_equations(tri, system_from_name(system_str), json);
        if (c_enum->parsed())
            return cmd_enumerate(tri, system_from_name(system_str), json, bound);
        if (c_surf->parsed()) return cmd_surfaces(tri, system_from_name(system_str), json);
        if (c_rec->parsed()) return cmd_recognize(tri, json);
        if (c_bench->parsed()) return cmd_bench(tri, json);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
