// scat2d command line: exterior billiard tracing, travelling-time and
// scattering-length spectra, Santalo quadrature, trapped-fraction sampling,
// spectrum comparison, and wavefront tools, all with byte-stable CSV output.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scat2d/compare.hpp"
#include "scat2d/fronts.hpp"
#include "scat2d/santalo.hpp"
#include "scat2d/scene_io.hpp"
#include "scat2d/spectra.hpp"

namespace {

using namespace scat2d;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDifferent = 3;
constexpr int kExitInternal = 4;

std::string quote_command(int argc, char** argv) {
    std::string cmd = "scat2d";
    for (int i = 1; i < argc; ++i) {
        cmd += ' ';
        cmd += argv[i];
    }
    return cmd;
}

// Every output starts with the same reproducibility header. No timestamps:
// identical invocations must produce identical bytes.
void write_header(std::ostream& os, const std::string& cmdline,
                  const std::string& extra = {}) {
    os << "# " << kToolVersion << "\n";
    os << "# command: " << cmdline << "\n";
    os << "# conventions: psi CCW from +x on the ball; phi CCW from the inward normal;"
          " omega_angle CCW from +x; b along omega rotated CCW by pi/2\n";
    if (!extra.empty()) os << "# " << extra << "\n";
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutputTarget(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw input_error("cannot open output file '" + path + "'");
        os = &file;
    }
};

const char* status_name(SampleStatus st) {
    switch (st) {
        case SampleStatus::Finite: return "finite";
        case SampleStatus::Grazing: return "grazing";
        default: return "cutoff";
    }
}

struct CommonArgs {
    std::string scene_path;
    std::string out_path;
    Caps caps;
};

void add_caps(CLI::App* cmd, Caps& caps) {
    cmd->add_option("--max-reflections", caps.max_reflections, "Reflection cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-time", caps.max_time, "Interior time cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--eps-tan", caps.eps_tan, "Tangency discriminant threshold")
        ->check(CLI::PositiveNumber);
}

int run_trace(const CommonArgs& args, const std::vector<double>& q,
              const std::vector<double>& v, const std::string& cmdline) {
    const Scene s = load_scene(args.scene_path);
    const PhasePoint x{{q[0], q[1]}, Direction(v[0], v[1])};
    const Trajectory tr = trace(s, x, args.caps);

    OutputTarget out(args.out_path);
    write_header(*out.os, cmdline);
    *out.os << "event,time,obstacle,x,y,cos_incidence,tangential\n";
    int idx = 0;
    for (const auto& ev : tr.events) {
        *out.os << ++idx << ',' << format_double(ev.time) << ',' << ev.obstacle_index
                << ',' << format_double(ev.point.x) << ',' << format_double(ev.point.y)
                << ',' << format_double(ev.cos_incidence) << ','
                << (ev.tangential ? 1 : 0) << "\n";
    }
    if (const auto* e = std::get_if<Exited>(&tr.status)) {
        *out.os << "# status exited\n";
        *out.os << "# exit " << format_double(e->exit.q.x) << ' '
                << format_double(e->exit.q.y) << ' ' << format_double(e->exit.v.vx) << ' '
                << format_double(e->exit.v.vy) << "\n";
    } else if (std::holds_alternative<CutoffReflections>(tr.status)) {
        *out.os << "# status cutoff-reflections\n";
    } else {
        *out.os << "# status cutoff-time\n";
    }
    *out.os << "# interior_time " << format_double(tr.interior_time) << "\n";
    *out.os << "# itinerary";
    for (int i : itinerary(tr)) *out.os << ' ' << i;
    *out.os << "\n";
    return kExitOk;
}

int run_spectrum(const CommonArgs& args, int n_psi, int n_phi,
                 const std::string& cmdline) {
    const Scene s = load_scene(args.scene_path);
    const auto recs = travelling_time_spectrum(s, n_psi, n_phi, args.caps);
    OutputTarget out(args.out_path);
    write_header(*out.os, cmdline);
    *out.os << "psi,phi,status,t,reflections,tangencies\n";
    for (const auto& r : recs) {
        *out.os << format_double(r.psi) << ',' << format_double(r.phi) << ','
                << status_name(r.status) << ',' << format_double(r.t) << ','
                << r.reflections << ',' << r.tangencies << "\n";
    }
    return kExitOk;
}

int run_sls(const CommonArgs& args, int n_omega, int n_b, const std::string& cmdline) {
    const Scene s = load_scene(args.scene_path);
    const auto recs = sls_sample(s, n_omega, n_b, args.caps);
    OutputTarget out(args.out_path);
    write_header(*out.os, cmdline);
    *out.os << "omega_angle,b,theta_x,theta_y,sojourn,reflections,tangential\n";
    for (const auto& r : recs) {
        *out.os << format_double(r.omega_angle) << ',' << format_double(r.b) << ','
                << format_double(r.theta.vx) << ',' << format_double(r.theta.vy) << ','
                << format_double(r.sojourn) << ',' << r.reflections << ','
                << (r.tangential ? 1 : 0) << "\n";
    }
    return kExitOk;
}

int run_santalo(const CommonArgs& args, int n_psi, int n_phi,
                const std::string& cmdline) {
    const Scene s = load_scene(args.scene_path);
    const SantaloReport rep = santalo_defect(s, n_psi, n_phi, args.caps);
    OutputTarget out(args.out_path);
    write_header(*out.os, cmdline);
    *out.os << "integral " << format_double(rep.integral) << "\n";
    *out.os << "phase_volume " << format_double(rep.phase_volume) << "\n";
    *out.os << "defect " << format_double(rep.defect) << "\n";
    *out.os << "excluded_weight " << format_double(rep.excluded_weight) << "\n";
    *out.os << "grid " << rep.n_psi << ' ' << rep.n_phi << "\n";
    return kExitOk;
}

int run_trapped(const CommonArgs& args, int n_samples, std::uint64_t seed,
                const std::vector<int>& cutoffs, const std::string& cmdline) {
    const Scene s = load_scene(args.scene_path);
    const auto fr = trapped_fraction(s, n_samples, seed, cutoffs, args.caps);
    OutputTarget out(args.out_path);
    write_header(*out.os, cmdline, "seed: " + std::to_string(seed));
    *out.os << "cutoff,fraction\n";
    for (const auto& [c, f] : fr) *out.os << c << ',' << format_double(f) << "\n";
    return kExitOk;
}

int run_compare(const std::string& path_a, const std::string& path_b,
                const std::string& out_path, int n_psi, int n_phi, const Caps& caps,
                double tol, const std::string& cmdline) {
    const Scene a = load_scene(path_a);
    const Scene b = load_scene(path_b);
    const Verdict v = distinguish(a, b, n_psi, n_phi, caps, tol);
    OutputTarget out(out_path);
    write_header(*out.os, cmdline);
    if (std::holds_alternative<IndistinguishableAtGrid>(v)) {
        *out.os << "verdict indistinguishable-at-grid\n";
        *out.os << "grid " << n_psi << ' ' << n_phi << "\n";
        return kExitOk;
    }
    const DisagreementReport& rep = std::get<Different>(v).report;
    *out.os << "verdict different\n";
    *out.os << "grid " << rep.n_psi << ' ' << rep.n_phi << "\n";
    *out.os << "compared " << rep.compared << "\n";
    *out.os << "disagreements " << rep.disagreements << "\n";
    *out.os << "status_mismatches " << rep.status_mismatches << "\n";
    *out.os << "disagree_fraction " << format_double(rep.disagree_fraction) << "\n";
    *out.os << "max_abs_delta " << format_double(rep.max_abs_delta) << "\n";
    if (rep.witness) {
        *out.os << "witness " << format_double(rep.witness->psi) << ' '
                << format_double(rep.witness->phi) << ' '
                << format_double(rep.witness->t_a) << ' '
                << format_double(rep.witness->t_b) << "\n";
    }
    return kExitDifferent;
}

int run_front(const CommonArgs& args, const std::vector<double>& q,
              const std::vector<double>& v, double kappa0, const std::string& cmdline) {
    const Scene s = load_scene(args.scene_path);
    const FrontState start{{q[0], q[1]}, Direction(v[0], v[1]), kappa0};
    const auto states = propagate_front(s, start, args.caps);
    OutputTarget out(args.out_path);
    write_header(*out.os, cmdline);
    *out.os << "stage,x,y,vx,vy,kappa\n";
    int idx = 0;
    for (const auto& st : states) {
        *out.os << ++idx << ',' << format_double(st.point.x) << ','
                << format_double(st.point.y) << ',' << format_double(st.dir.vx) << ','
                << format_double(st.dir.vy) << ',' << format_double(st.kappa) << "\n";
    }
    return kExitOk;
}

int run_involute(const CommonArgs& args, int obstacle_index, double s0, double eps0,
                 double delta, int orientation, int n_samples,
                 const std::string& cmdline) {
    const Scene s = load_scene(args.scene_path);
    if (obstacle_index < 1 || obstacle_index > static_cast<int>(s.obstacles.size()))
        throw input_error("involute: --obstacle-index out of range");
    const auto y =
        involute(s.obstacle(obstacle_index), s0, eps0, delta, orientation, n_samples);
    OutputTarget out(args.out_path);
    write_header(*out.os, cmdline);
    *out.os << "s,x,y,nx,ny,kappa\n";
    for (std::size_t k = 0; k < y.size(); ++k) {
        *out.os << format_double(y.params[k]) << ',' << format_double(y.points[k].x)
                << ',' << format_double(y.points[k].y) << ','
                << format_double(y.normals[k].vx) << ',' << format_double(y.normals[k].vy)
                << ',' << format_double(y.curvatures[k]) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exterior billiards in the plane: travelling times, scattering lengths,"
                 " Santalo identity, wavefronts"};
    app.require_subcommand(1);
    const std::string cmdline = quote_command(argc, argv);

    CommonArgs trace_args, spec_args, sls_args, sant_args, trap_args, front_args,
        inv_args;
    std::vector<double> q{0.0, 0.0}, v{1.0, 0.0};
    std::vector<double> fq{0.0, 0.0}, fv{1.0, 0.0};
    int n_psi = 200, n_phi = 200, n_omega = 64, n_b = 64;
    int sant_n_psi = 400, sant_n_phi = 400;
    int n_samples = 100'000;
    std::uint64_t seed = 1;
    std::vector<int> cutoffs{10, 100, 1000, 10'000};
    double tol = 1e-7, kappa0 = 0.0;
    double s0 = 0.0, eps0 = 0.5, delta = 0.05;
    int orientation = 1, inv_samples = 64, obstacle_index = 1;
    std::string path_a, path_b, compare_out;
    int cmp_n_psi = 200, cmp_n_phi = 200;
    Caps cmp_caps;

    auto* c_trace = app.add_subcommand("trace", "Trace one billiard trajectory");
    c_trace->add_option("--scene", trace_args.scene_path, "Scene file")->required();
    c_trace->add_option("--q", q, "Start point X,Y")->delimiter(',')->expected(2)->required();
    c_trace->add_option("--v", v, "Start direction VX,VY (normalized)")
        ->delimiter(',')->expected(2)->required();
    c_trace->add_option("--out", trace_args.out_path, "Output file (default stdout)");
    add_caps(c_trace, trace_args.caps);

    auto* c_spec = app.add_subcommand("spectrum", "Sample the travelling-time spectrum");
    c_spec->add_option("--scene", spec_args.scene_path)->required();
    c_spec->add_option("--n-psi", n_psi)->check(CLI::PositiveNumber);
    c_spec->add_option("--n-phi", n_phi)->check(CLI::PositiveNumber);
    c_spec->add_option("--out", spec_args.out_path);
    add_caps(c_spec, spec_args.caps);

    auto* c_sls = app.add_subcommand("sls", "Sample the scattering length spectrum");
    c_sls->add_option("--scene", sls_args.scene_path)->required();
    c_sls->add_option("--n-omega", n_omega)->check(CLI::PositiveNumber);
    c_sls->add_option("--n-b", n_b)->check(CLI::PositiveNumber);
    c_sls->add_option("--out", sls_args.out_path);
    add_caps(c_sls, sls_args.caps);

    auto* c_sant = app.add_subcommand("santalo", "Liouville integral and defect report");
    c_sant->add_option("--scene", sant_args.scene_path)->required();
    c_sant->add_option("--n-psi", sant_n_psi)->check(CLI::PositiveNumber);
    c_sant->add_option("--n-phi", sant_n_phi)->check(CLI::PositiveNumber);
    c_sant->add_option("--out", sant_args.out_path);
    add_caps(c_sant, sant_args.caps);

    auto* c_trap = app.add_subcommand("trapped", "Trapped-fraction decay experiment");
    c_trap->add_option("--scene", trap_args.scene_path)->required();
    c_trap->add_option("--n-samples", n_samples)->check(CLI::PositiveNumber);
    c_trap->add_option("--seed", seed);
    c_trap->add_option("--cutoffs", cutoffs, "Reflection cutoffs, increasing")
        ->delimiter(',');
    c_trap->add_option("--out", trap_args.out_path);
    add_caps(c_trap, trap_args.caps);

    auto* c_cmp = app.add_subcommand("compare", "Distinguish two scenes by spectrum");
    c_cmp->add_option("--scene-a", path_a)->required();
    c_cmp->add_option("--scene-b", path_b)->required();
    c_cmp->add_option("--n-psi", cmp_n_psi)->check(CLI::PositiveNumber);
    c_cmp->add_option("--n-phi", cmp_n_phi)->check(CLI::PositiveNumber);
    c_cmp->add_option("--tol", tol)->check(CLI::PositiveNumber);
    c_cmp->add_option("--out", compare_out);
    add_caps(c_cmp, cmp_caps);

    auto* c_front = app.add_subcommand("front", "Propagate a convex wavefront germ");
    c_front->add_option("--scene", front_args.scene_path)->required();
    c_front->add_option("--q", fq, "Start point X,Y")->delimiter(',')->expected(2)->required();
    c_front->add_option("--v", fv, "Front normal VX,VY")->delimiter(',')->expected(2)->required();
    c_front->add_option("--kappa0", kappa0, "Initial curvature (>= 0)")
        ->check(CLI::NonNegativeNumber);
    c_front->add_option("--out", front_args.out_path);
    add_caps(c_front, front_args.caps);

    auto* c_inv = app.add_subcommand("involute", "Involute of an obstacle boundary");
    c_inv->add_option("--scene", inv_args.scene_path)->required();
    c_inv->add_option("--obstacle-index", obstacle_index)->check(CLI::PositiveNumber);
    c_inv->add_option("--s0", s0, "Base arc-length coordinate");
    c_inv->add_option("--eps0", eps0, "String length at s0")->check(CLI::PositiveNumber);
    c_inv->add_option("--delta", delta, "Lower string bound")->check(CLI::PositiveNumber);
    c_inv->add_option("--orientation", orientation, "+1 CCW, -1 CW");
    c_inv->add_option("--n-samples", inv_samples)->check(CLI::PositiveNumber);
    c_inv->add_option("--out", inv_args.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (c_trace->parsed()) return run_trace(trace_args, q, v, cmdline);
        if (c_spec->parsed()) return run_spectrum(spec_args, n_psi, n_phi, cmdline);
        if (c_sls->parsed()) return run_sls(sls_args, n_omega, n_b, cmdline);
        if (c_sant->parsed()) return run_santalo(sant_args, sant_n_psi, sant_n_phi, cmdline);
        if (c_trap->parsed()) return run_trapped(trap_args, n_samples, seed, cutoffs, cmdline);
        if (c_cmp->parsed())
            return run_compare(path_a, path_b, compare_out, cmp_n_psi, cmp_n_phi, cmp_caps,
                               tol, cmdline);
        if (c_front->parsed()) return run_front(front_args, fq, fv, kappa0, cmdline);
        if (c_inv->parsed())
            return run_involute(inv_args, obstacle_index, s0, eps0, delta, orientation,
                                inv_samples, cmdline);
        return kExitInput;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
