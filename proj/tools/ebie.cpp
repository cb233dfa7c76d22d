#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <random>

#include "ebie/cq.hpp"
#include "ebie/hilbert.hpp"
#include "ebie/scene.hpp"
#include "ebie/solvers.hpp"
#include "ebie/specfun.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ebie;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void write_manifest(const std::string& outdir, const std::string& command,
                    const json& params, const std::vector<std::string>& files,
                    double seconds) {
  json m;
  m["command"] = command;
  m["parameters"] = params;
  m["outputs"] = files;
  m["runtime_seconds"] = seconds;
  std::ofstream out(fs::path(outdir) / "manifest.json");
  out << m.dump(2) << '\n';
}

std::string fmt(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.4e", v);
  return b;
}

std::string fmt3(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3f", v);
  return b;
}

int cmd_converge_frequency(const std::string& equation, std::vector<int> Ns,
                           double k, const Material& mat, double ea, double eb,
                           unsigned seed, const std::string& outdir) {
  Timer tm;
  fs::create_directories(outdir);
  const cplx s(0.0, -k);
  const Curve ell = curve_ellipse(ea, eb);
  const AnalyticWave wave = plane_wave_ps(k, mat);
  const auto obs = observation_circle(2.0, 10, seed);
  std::vector<std::string> files;

  for (const std::string eq : {std::string("first"), std::string("second")}) {
    if (equation != "both" && equation != eq) continue;
    std::printf("# equation: %s kind\n", eq.c_str());
    std::printf("%6s %12s %7s %12s %7s %12s %7s\n", "N", "E_U", "ecr", "E_lam",
                "ecr", "E_phi", "ecr");
    const std::string path =
        (fs::path(outdir) / ("table_" + eq + ".csv")).string();
    std::ofstream csv(path);
    csv << "N,E_U,ecr_U,E_lambda,ecr_lambda,E_phi,ecr_phi\n";
    double pU = 0, pL = 0, pP = 0;
    bool first_row = true;
    for (int N : Ns) {
      const GridData g = sample_closed(ell, N);
      const TraceSolution sol =
          eq == "first" ? solve_dirichlet_first_kind(g, s, mat, wave)
                        : solve_dirichlet_second_kind(g, s, mat, wave);
      Eigen::VectorXcd u_ex(2 * N), lam_ex(2 * N), uobs_ex(2 * (int)obs.size());
      for (int j = 0; j < N; ++j) {
        const CVec2 u = wave.U(g.m[j]), t = wave.traction(g.m[j], g.n[j]);
        u_ex[j] = u.x(), u_ex[N + j] = u.y();
        lam_ex[j] = t.x(), lam_ex[N + j] = t.y();
      }
      for (size_t p = 0; p < obs.size(); ++p) {
        const CVec2 u = wave.U(obs[p]);
        uobs_ex[p] = u.x(), uobs_ex[p + obs.size()] = u.y();
      }
      const Eigen::VectorXcd uh =
          represent_field(g, s, mat, sol.lambda, sol.phi_eff, obs);
      const double EU = error_metrics(uh, uobs_ex);
      const double EL = error_metrics(sol.lambda, lam_ex);
      const double EP = error_metrics(sol.phi_eff, u_ex);
      auto ecr = [&](double prev, double cur) {
        return first_row ? std::string("") : fmt3(std::log2(prev / cur));
      };
      const std::string rU = ecr(pU, EU), rL = ecr(pL, EL), rP = ecr(pP, EP);
      std::printf("%6d %12s %7s %12s %7s %12s %7s\n", N, fmt(EU).c_str(),
                  rU.c_str(), fmt(EL).c_str(), rL.c_str(), fmt(EP).c_str(),
                  rP.c_str());
      csv << N << ',' << fmt(EU) << ',' << rU << ',' << fmt(EL) << ',' << rL
          << ',' << fmt(EP) << ',' << rP << '\n';
      pU = EU, pL = EL, pP = EP;
      first_row = false;
    }
    files.push_back(path);
  }
  write_manifest(outdir, "converge-frequency",
                 {{"equation", equation},
                  {"N", Ns},
                  {"k", k},
                  {"lam", mat.lam},
                  {"mu", mat.mu},
                  {"rho", mat.rho},
                  {"ellipse", {ea, eb}},
                  {"seed", seed}},
                 files, tm.seconds());
  return 0;
}

int cmd_converge_time(int N, std::vector<int> Ms, double T, double t0,
                      double width, const std::string& bc, const Material& mat,
                      double ea, double eb, unsigned seed,
                      const std::string& outdir) {
  Timer tm;
  fs::create_directories(outdir);
  const Curve ell = curve_ellipse(ea, eb);
  const GridData g = sample_closed(ell, N);
  const Vec2 d = Vec2(1, 1).normalized();
  const PlanePulse pulse = smoothed_plane_pulse(mat, d, t0, width);
  const auto obs = observation_circle(2.0, 10, seed);
  const int P = (int)obs.size();
  Eigen::VectorXcd uex(2 * P);
  for (int p = 0; p < P; ++p) {
    const Vec2 u = pulse.displacement(obs[p], T);
    uex[p] = u.x(), uex[p + P] = u.y();
  }
  const bool doD = bc != "neumann", doN = bc != "dirichlet";

  std::printf("%6s %14s %7s %14s %7s\n", "M", "E_U dirichlet", "ecr",
              "E_U neumann", "ecr");
  const std::string path = (fs::path(outdir) / "table_time.csv").string();
  std::ofstream csv(path);
  csv << "M,E_U_dirichlet,ecr_dirichlet,E_U_neumann,ecr_neumann\n";
  double pD = 0, pN = 0;
  bool first_row = true;
  for (int M : Ms) {
    double eD = 0, eN = 0;
    if (doD) {
      const Eigen::MatrixXd U = run_transient_dirichlet(g, mat, pulse, T, M, obs);
      eD = error_metrics(U.col(M).cast<cplx>(), uex);
    }
    if (doN) {
      const Eigen::MatrixXd U = run_transient_neumann(g, mat, pulse, T, M, obs);
      eN = error_metrics(U.col(M).cast<cplx>(), uex);
    }
    const std::string rD =
        (first_row || !doD) ? "" : fmt3(std::log2(pD / eD));
    const std::string rN =
        (first_row || !doN) ? "" : fmt3(std::log2(pN / eN));
    std::printf("%6d %14s %7s %14s %7s\n", M, doD ? fmt(eD).c_str() : "-",
                rD.c_str(), doN ? fmt(eN).c_str() : "-", rN.c_str());
    csv << M << ',' << (doD ? fmt(eD) : "") << ',' << rD << ','
        << (doN ? fmt(eN) : "") << ',' << rN << '\n';
    pD = eD, pN = eN;
    first_row = false;
  }
  write_manifest(outdir, "converge-time",
                 {{"N", N},
                  {"M", Ms},
                  {"T", T},
                  {"t0", t0},
                  {"width", width},
                  {"bc", bc},
                  {"lam", mat.lam},
                  {"mu", mat.mu},
                  {"rho", mat.rho},
                  {"seed", seed}},
                 {path}, tm.seconds());
  return 0;
}

int cmd_crack(std::vector<int> Ns, double k, const Material& mat,
              unsigned seed, const std::string& outdir) {
  Timer tm;
  fs::create_directories(outdir);
  const cplx s(0.0, -k);
  const Curve arc = curve_half_circle();
  const AnalyticWave inc = p_wave_incident(k, mat, Vec2(1, 1));
  const auto obs = observation_circle(5.0, 10, seed);
  std::map<int, Eigen::VectorXcd> UD, UN;
  for (int N : Ns) {
    const GridData g = sample_arc(arc, N);
    const Eigen::VectorXcd eta = solve_crack_dirichlet(g, s, mat, inc);
    const Eigen::VectorXcd psi = solve_crack_neumann(g, s, mat, inc);
    UD[N] = crack_field_dirichlet(g, s, mat, eta, obs);
    UN[N] = crack_field_neumann(g, s, mat, psi, obs);
  }
  std::printf("%6s %16s %16s\n", "N", "ecr dirichlet", "ecr neumann");
  const std::string path = (fs::path(outdir) / "table_crack.csv").string();
  std::ofstream csv(path);
  csv << "N,ecr_dirichlet,ecr_neumann\n";
  for (int N : Ns) {
    std::string rD = "---", rN = "---";
    if (UD.count(N / 2) && UD.count(N / 4)) {
      rD = fmt3(three_grid_ecr(UD[N / 4], UD[N / 2], UD[N]));
      rN = fmt3(three_grid_ecr(UN[N / 4], UN[N / 2], UN[N]));
    }
    std::printf("%6d %16s %16s\n", N, rD.c_str(), rN.c_str());
    csv << N << ',' << rD << ',' << rN << '\n';
  }
  write_manifest(outdir, "crack",
                 {{"N", Ns},
                  {"k", k},
                  {"lam", mat.lam},
                  {"mu", mat.mu},
                  {"rho", mat.rho},
                  {"seed", seed}},
                 {path}, tm.seconds());
  return 0;
}

int cmd_scatter(const std::string& config, std::string outdir, int M, double T,
                int stride) {
  Timer tm;
  SceneConfig cfg =
      config.empty() ? scene_three_disks() : scene_from_json(config);
  if (M > 0) cfg.M = M;
  if (T > 0) cfg.T = T;
  if (stride > 0) cfg.frame_stride = stride;
  cfg.outdir = outdir;
  const SceneResult res = run_scattering_scene(cfg);
  std::printf("frames: %zu   peak |U|: %.6g   pre-arrival max: %.3g\n",
              res.frame_times.size(), res.peak, res.pre_arrival_max);
  std::printf("manifest: %s\n", res.manifest_file.c_str());
  std::printf("runtime: %.1f s\n", tm.seconds());
  return 0;
}

int cmd_verify() {
  Timer tm;
  int fails = 0;
  auto check = [&](const std::string& name, bool ok, double value) {
    std::printf("[%s] %-44s %.3e\n", ok ? "PASS" : "FAIL", name.c_str(), value);
    if (!ok) ++fails;
  };

  {  // modified Bessel functions against frozen mpmath values
    const cplx ref[4][5] = {
        {{1, 0},
         {0.42102443824070833, 0},
         {0.60190723019723457, 0},
         {1.6248388986351775, 0},
         {7.1012628247379445, 0}},
        {{1, 1},
         {0.080197726946517819, -0.35727745928533025},
         {0.024568305523740349, -0.45971947380118936},
         {-0.3549534413309312, -0.84156523861025996},
         {-2.368469054358642, -1.4329430683598469}},
        {{0, -3},
         {-0.59195461148071114, -0.40848865553578915},
         {-0.53259256661944419, -0.50999739386720532},
         {-0.25195634890257426, -0.76355036661541861},
         {0.48547458886778063, -0.84593919240397101}},
        {{4, -2.5},
         {-0.0096307622855967434, 0.0037831310471492735},
         {-0.010669853334213132, 0.0036125234539437514},
         {-0.014278917069570847, 0.0026842960341373342},
         {-0.022144263826550521, -0.00087468706962978238}}};
    double worst = 0;
    for (const auto& row : ref) {
      const auto K = bessel_k03(row[0]);
      for (int n = 0; n < 4; ++n)
        worst = std::max(worst, std::abs(K[n] - row[n + 1]) / std::abs(row[n + 1]));
    }
    check("bessel_k spot values rel err <= 1e-12", worst <= 1e-12, worst);
  }
  {  // stencil row sums
    const int N = 17;
    double worst = 0;
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(N);
    auto rowsum = [&](const BlockCirculant& bc) {
      return bc.first_row().sum();
    };
    worst = std::max(worst, std::abs(rowsum(matrix_Q(N)) - 1.0));
    worst = std::max(worst, std::abs(rowsum(matrix_M(N)) - 1.0));
    worst = std::max(worst, std::abs(rowsum(matrix_D(N))));
    const auto [Pp, Pm] = matrix_Ppm(N);
    worst = std::max(worst, std::abs(rowsum(Pp) - 0.5));
    worst = std::max(worst, std::abs(rowsum(Pm) - 0.5));
    check("mixing stencil row sums", worst < 1e-15, worst);
  }
  {  // periodic transform identities
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0;
    for (int N : {8, 32, 128}) {
      for (int q = 0; q < 20; ++q) {
        double t = uni(gen);
        while (std::abs(t * N - std::round(t * N)) < 0.05) t = uni(gen);
        worst = std::max(worst, verify_log_identity(N, t));
        worst = std::max(worst, verify_cot_identity(N, t, N));
      }
    }
    check("log/cot lattice identities", worst <= 1e-10, worst);
  }
  {  // fork order dichotomy
    const OrderStudy hi = consistency_order_study(5.0 / 6, {16, 32, 64, 128}, 2);
    const OrderStudy lo = consistency_order_study(1.0, {16, 32, 64, 128}, 2);
    check("fork slope a=5/6 >= 2.9", hi.slope >= 2.9, hi.slope);
    check("fork slope a=1 <= 1.5", lo.slope <= 1.5, lo.slope);
  }
  {  // crack parity at modest size
    const Material mat(5, 3, 2.5);
    const cplx s(0, -3);
    const GridData g = sample_arc(curve_half_circle(), 64);
    const AnalyticWave inc = p_wave_incident(3.0, mat, Vec2(1, 1));
    const Eigen::VectorXcd eta = solve_crack_dirichlet(g, s, mat, inc);
    const Eigen::VectorXcd psi = solve_crack_neumann(g, s, mat, inc);
    const int N = g.N;
    double dev = 0;
    for (int c = 0; c < 2; ++c)
      for (int j = 0; j < N; ++j) {
        dev = std::max(dev, std::abs(eta[c * N + j] - eta[c * N + N - 1 - j]));
        dev = std::max(dev, std::abs(psi[c * N + j] + psi[c * N + N - 1 - j]));
      }
    const double scale =
        std::max(eta.cwiseAbs().maxCoeff(), psi.cwiseAbs().maxCoeff());
    check("crack density parity", dev / scale <= 1e-12, dev / scale);
  }
  {  // convolution quadrature: BDF2 impulse and round trip
    const int M = 40;
    const double k = 0.05;
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(1, M + 1);
    X(0, 0) = 1.0;
    TransferFunction Ds{1, 1, [](cplx s) {
                          return Eigen::MatrixXcd::Constant(1, 1, s);
                        }};
    const Eigen::MatrixXd W = cq_forward(Ds, X, k);
    double worst = std::abs(W(0, 0) - 1.5 / k);
    worst = std::max(worst, std::abs(W(0, 1) + 2.0 / k));
    worst = std::max(worst, std::abs(W(0, 2) - 0.5 / k));
    for (int n = 3; n <= M; ++n) worst = std::max(worst, std::abs(W(0, n)));
    check("cq impulse = BDF2 weights", worst * k <= 1e-9, worst * k);

    Eigen::MatrixXd Y(1, M + 1);
    for (int n = 0; n <= M; ++n) Y(0, n) = std::sin(1.7 * n * k);
    TransferFunction As{1, 1, [](cplx s) {
                          return Eigen::MatrixXcd::Constant(1, 1, s + 2.0);
                        }};
    const Eigen::MatrixXd rt = cq_solve(As, cq_forward(As, Y, k), k);
    const double err = (rt - Y).cwiseAbs().maxCoeff();
    check("cq round trip", err <= 1e-8, err);
  }
  std::printf("verify: %s (%.1f s)\n", fails ? "FAIL" : "PASS", tm.seconds());
  return fails ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tn = std::getenv("EBIE_THREADS")) {
    const int n = std::atoi(tn);
    if (n > 0) {
#ifdef _OPENMP
      omp_set_num_threads(n);
#endif
      Eigen::setNbThreads(n);
    }
  }

  CLI::App app{"Calderon calculus toolkit for 2D elastic waves"};
  app.require_subcommand(1);

  double lam = 5.0, mu = 3.0, rho = 2.5, k = 3.0, ea = 4.0, eb = 3.0;
  unsigned seed = 1;
  std::string outdir;
  auto add_material = [&](CLI::App* c) {
    c->add_option("--lam", lam, "first Lame parameter");
    c->add_option("--mu", mu, "second Lame parameter");
    c->add_option("--rho", rho, "density");
  };

  auto* cf = app.add_subcommand("converge-frequency",
                                "time-harmonic Dirichlet convergence study");
  std::string equation = "both";
  std::vector<int> Ns{120, 240, 480, 960};
  cf->add_option("--equation", equation, "first|second|both")
      ->check(CLI::IsMember({"first", "second", "both"}));
  cf->add_option("--N", Ns, "grid sizes")->delimiter(',');
  cf->add_option("--k", k, "wavenumber (s = -ik)");
  cf->add_option("--a", ea, "ellipse semi-axis a");
  cf->add_option("--b", eb, "ellipse semi-axis b");
  cf->add_option("--seed", seed, "observation point seed");
  add_material(cf);
  cf->add_option("--out", outdir, "output directory");

  auto* ct = app.add_subcommand("converge-time",
                                "transient interior convergence study");
  int tN = 500;
  std::vector<int> tMs{200, 400, 800};
  double T = 3.0, t0 = 2.3, width = 1.0;
  std::string bc = "both";
  ct->add_option("--N", tN, "grid size");
  ct->add_option("--M", tMs, "time step counts")->delimiter(',');
  ct->add_option("--T", T, "final time");
  ct->add_option("--t0", t0, "pulse delay");
  ct->add_option("--width", width, "pulse ramp width");
  ct->add_option("--bc", bc, "dirichlet|neumann|both")
      ->check(CLI::IsMember({"dirichlet", "neumann", "both"}));
  ct->add_option("--a", ea, "ellipse semi-axis a");
  ct->add_option("--b", eb, "ellipse semi-axis b");
  ct->add_option("--seed", seed, "observation point seed");
  add_material(ct);
  ct->add_option("--out", outdir, "output directory");

  auto* cr = app.add_subcommand("crack", "open-arc scattering rate study");
  std::vector<int> cNs{10, 20, 40, 80, 160, 320};
  cr->add_option("--N", cNs, "grid sizes")->delimiter(',');
  cr->add_option("--k", k, "wavenumber (s = -ik)");
  cr->add_option("--seed", seed, "observation point seed");
  add_material(cr);
  cr->add_option("--out", outdir, "output directory");

  auto* sc = app.add_subcommand("scatter", "transient multi-obstacle movie");
  std::string config;
  int sM = -1, stride = -1;
  double sT = -1;
  sc->add_option("--config", config, "scene JSON file");
  sc->add_option("--M", sM, "time steps override");
  sc->add_option("--T", sT, "horizon override");
  sc->add_option("--stride", stride, "frame stride override");
  sc->add_option("--out", outdir, "output directory");

  auto* ve = app.add_subcommand("verify", "quick self checks, exit 0 iff pass");
  (void)ve;

  CLI11_PARSE(app, argc, argv);

  try {
    const Material mat(lam, mu, rho);
    if (cf->parsed())
      return cmd_converge_frequency(equation, Ns, k, mat, ea, eb, seed,
                                    outdir.empty() ? "runs/frequency" : outdir);
    if (ct->parsed())
      return cmd_converge_time(tN, tMs, T, t0, width, bc, mat, ea, eb, seed,
                               outdir.empty() ? "runs/time" : outdir);
    if (cr->parsed())
      return cmd_crack(cNs, k, mat, seed,
                       outdir.empty() ? "runs/crack" : outdir);
    if (sc->parsed())
      return cmd_scatter(config, outdir.empty() ? "runs/scene" : outdir, sM,
                         sT, stride);
    if (ve->parsed()) return cmd_verify();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
