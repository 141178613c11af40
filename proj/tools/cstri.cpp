// Command-line front end: builds the projective-space triangulations,
// verifies complex/tower files, and prints the reference bounds.
//
// Exit codes: 0 all checks pass, 1 a check failed or a build invariant was
// violated, 2 malformed input or usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cstri/cstri.hpp"

namespace {

using namespace cstri;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("parse", "cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spew(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("parse", "cannot write '" + path + "'");
    out << text;
}

std::string betti_csv(const std::vector<long long>& b) {
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b[i]);
    }
    return s;
}

int default_zmax() {
    if (const char* env = std::getenv("CSTRI_ZMAX")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0') return static_cast<int>(v);
    }
    return kDefaultZCap;
}

int cmd_build(int dim, int max_dim, const std::string& out_path, const std::string& tower_path) {
    if (dim < 0 || dim > max_dim) {
        std::cerr << "dimension must be between 0 and " << max_dim << "\n";
        return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Tower t = build_tower(dim);
    const SimplicialComplex rp = quotient_rp(t.top());
    const double elapsed = ms_since(start);

    const FVector fv = rp.f_vector();
    std::cout << "dim=" << dim << " f=" << fvector_to_string(fv)
              << " f0=" << (fv.empty() ? 0 : fv[0]) << " f0_formula=" << fibonacci_f0(dim)
              << " euler=" << rp.euler_characteristic()
              << " build_ms=" << static_cast<long long>(elapsed) << "\n";
    if (!fv.empty() && fv[0] != fibonacci_f0(dim)) {
        std::cerr << "vertex count disagrees with the closed form\n";
        return 1;
    }
    if (!out_path.empty()) {
        spew(out_path, serialize_complex(rp, false));
        std::cout << "wrote=" << out_path << "\n";
    }
    if (!tower_path.empty()) {
        spew(tower_path, serialize_tower(t));
        std::cout << "wrote_tower=" << tower_path << "\n";
    }
    return 0;
}

struct CheckSelection {
    std::set<std::string> names;
    bool explicit_selection = false;

    bool wants(const std::string& n) const {
        return names.count(n) != 0;
    }
};

int run_checks_on_complex(const NamedComplex& nc, const CheckSelection& sel, int zmax,
                          const std::string& tag) {
    const SimplicialComplex& c = nc.complex;
    bool all_ok = true;
    auto report = [&](const std::string& check, bool ok, const std::string& extra) {
        std::cout << tag << "check=" << check << " status=" << (ok ? "pass" : "fail");
        if (!extra.empty()) std::cout << " " << extra;
        std::cout << "\n";
        all_ok = all_ok && ok;
    };

    if (sel.wants("cs")) {
        if (!nc.antipodal_sigma && !sel.explicit_selection) {
            // auto mode only checks declared involutions
        } else if (!nc.antipodal_sigma) {
            report("cs", false, "reason=requires-sigma-antipodal");
        } else {
            CsReport r = check_cs(c);
            report("cs", r.ok, r.ok ? "" : ("witness=" + face_to_string(r.witness)));
        }
    }
    if (sel.wants("4cycle")) {
        if (!nc.antipodal_sigma && !sel.explicit_selection) {
            // skipped in auto mode
        } else if (!nc.antipodal_sigma) {
            report("4cycle", false, "reason=requires-sigma-antipodal");
        } else {
            auto w = find_induced_cs_4cycle(c);
            report("4cycle", !w.has_value(), w ? ("witness=" + std::to_string(*w)) : "");
        }
    }
    if (sel.wants("pm")) {
        CheckReport r = check_closed_pseudomanifold(c);
        report("pm", r.ok, r.ok ? "" : ("detail=\"" + r.summary() + "\""));
    }
    if (sel.wants("links")) {
        CheckReport r = check_vertex_links(c, c.dim());
        report("links", r.ok, r.ok ? "" : ("detail=\"" + r.summary() + "\""));
    }
    if (sel.wants("hz")) {
        if (c.dim() > zmax && !sel.explicit_selection) {
            std::cout << tag << "check=hz status=skipped reason=dim-exceeds-zmax zmax=" << zmax << "\n";
        } else {
            try {
                HomologyGroups h = homology_Z(c, zmax);
                std::string desc;
                for (std::size_t k = 0; k < h.groups.size(); ++k) {
                    if (k) desc += " ";
                    desc += "h" + std::to_string(k) + "=" + h.groups[k].to_string();
                }
                report("hz", true, desc);
            } catch (const Error& e) {
                report("hz", false, std::string("detail=\"") + e.what() + "\"");
            }
        }
    }
    if (sel.wants("hgf2")) {
        const std::vector<long long> b = betti_gf2(c);
        long long chi_b = 0;
        for (std::size_t k = 0; k < b.size(); ++k) chi_b += (k % 2 == 0 ? 1 : -1) * b[k];
        const bool ok = chi_b == c.euler_characteristic();
        report("hgf2", ok, "betti_gf2=" + betti_csv(b));
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& path, const std::string& checks_csv, int zmax) {
    std::string text = slurp(path);
    CheckSelection sel;
    if (!checks_csv.empty()) {
        sel.explicit_selection = true;
        std::stringstream ss(checks_csv);
        std::string name;
        while (std::getline(ss, name, ',')) {
            static const std::set<std::string> known{"cs", "4cycle", "pm", "links", "hz", "hgf2", "cert"};
            if (!known.count(name)) fail("parse", "unknown check '" + name + "'");
            sel.names.insert(name);
        }
    } else {
        sel.names = {"cs", "4cycle", "pm", "links", "hz", "hgf2", "cert"};
    }

    int rc = 0;
    if (looks_like_tower(text)) {
        Tower t = parse_tower(text);
        for (std::size_t i = 0; i < t.levels.size(); ++i) {
            NamedComplex nc{t.levels[i].sphere, true};
            const std::string tag = "level=" + std::to_string(i) + " ";
            rc |= run_checks_on_complex(nc, sel, zmax, tag);
        }
        if (sel.wants("cert")) {
            CertificateReport r = verify_certificate(t);
            std::cout << "check=cert status=" << (r.ok ? "pass" : "fail");
            if (!r.ok) {
                std::cout << " detail=\"";
                for (std::size_t i = 0; i < r.failures.size(); ++i)
                    std::cout << (i ? "; " : "") << r.failures[i];
                std::cout << "\"";
            }
            std::cout << "\n";
            rc |= r.ok ? 0 : 1;
        }
    } else {
        if (sel.explicit_selection && sel.wants("cert"))
            fail("parse", "check 'cert' requires a tower file");
        NamedComplex nc = parse_complex(text);
        rc |= run_checks_on_complex(nc, sel, zmax, "");
    }
    std::cout << "result=" << (rc == 0 ? "pass" : "fail") << "\n";
    return rc;
}

int cmd_kuhnel(int dim, const std::string& out_path) {
    const SimplicialComplex rp = kuhnel_rpd(dim);
    const FVector fv = rp.f_vector();
    std::cout << "dim=" << dim << " f=" << fvector_to_string(fv) << " f0=" << fv[0]
              << " f0_formula=" << kuhnel_f0(dim) << "\n";
    if (!out_path.empty()) {
        spew(out_path, serialize_complex(rp, false));
        std::cout << "wrote=" << out_path << "\n";
    }
    return fv[0] == kuhnel_f0(dim) ? 0 : 1;
}

int cmd_compare(int dim) {
    const Bound bound = arnoux_marin_bound(dim);
    const long long ours = fibonacci_f0(dim);
    const long long kuhnel = kuhnel_f0(dim);
    std::cout << "d=" << dim << " bound=" << bound.value << " ours=" << ours
              << " kuhnel=" << kuhnel;
    if (!bound.in_stated_range) {
        std::cout << " bound_status=out-of-stated-range\n";
        return 0;
    }
    const bool bound_ok = ours >= bound.value;
    const bool improves = ours < kuhnel;
    std::cout << " bound_ok=" << (bound_ok ? "yes" : "no")
              << " improves_kuhnel=" << (improves ? "yes" : "no") << "\n";
    return (bound_ok && improves) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"centrally symmetric sphere towers and projective-space triangulations"};
    app.require_subcommand(1);

    int dim = 2;
    int max_dim = 7;
    std::string out_path, tower_path, checks;
    int zmax = default_zmax();

    CLI::App* build = app.add_subcommand("build", "build the triangulation of dimension d");
    build->add_option("--dim", dim, "dimension")->required();
    build->add_option("--out", out_path, "output complex file");
    build->add_option("--tower", tower_path, "also write the sphere tower");
    build->add_option("--max-dim", max_dim, "largest allowed dimension")->capture_default_str();

    std::string verify_path;
    CLI::App* verify = app.add_subcommand("verify", "verify a complex or tower file");
    verify->add_option("path", verify_path, "input file")->required();
    verify->add_option("--checks", checks, "comma list: cs,4cycle,pm,links,hz,hgf2,cert");
    verify->add_option("--zmax", zmax, "integral homology dimension cap")->capture_default_str();

    CLI::App* kuhnel = app.add_subcommand("kuhnel", "build the subset-chain triangulation");
    kuhnel->add_option("--dim", dim, "dimension")->required();
    kuhnel->add_option("--out", out_path, "output complex file");

    CLI::App* compare = app.add_subcommand("compare", "print the reference bounds for dimension d");
    compare->add_option("--dim", dim, "dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(dim, max_dim, out_path, tower_path);
        if (verify->parsed()) return cmd_verify(verify_path, checks, zmax);
        if (kuhnel->parsed()) return cmd_kuhnel(dim, out_path);
        if (compare->parsed()) return cmd_compare(dim);
    } catch (const cstri::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == "parse" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
