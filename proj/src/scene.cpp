#include "ebie/scene.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>

#include "ebie/cq.hpp"
#include "ebie/operators.hpp"
#include "ebie/solvers.hpp"

namespace ebie {

std::vector<Vec2> Lattice::points() const {
  std::vector<Vec2> pts;
  pts.reserve((size_t)nx * ny);
  const double dx = nx > 1 ? (x1 - x0) / (nx - 1) : 0.0;
  const double dy = ny > 1 ? (y1 - y0) / (ny - 1) : 0.0;
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix)
      pts.emplace_back(x0 + ix * dx, y0 + iy * dy);
  return pts;
}

SceneConfig scene_three_disks() {
  SceneConfig cfg;
  cfg.curves = {curve_circle({1.0, 1.0}, 1.0), curve_circle({3.0, 3.0}, 1.0),
                curve_circle({3.5, 0.4}, 1.0)};
  return cfg;
}

SceneConfig scene_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("scene config not readable: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  SceneConfig cfg = scene_three_disks();
  if (j.contains("curves")) {
    cfg.curves.clear();
    for (const auto& c : j["curves"]) cfg.curves.push_back(curve_from_json(c.dump()));
  }
  cfg.points_per_curve = j.value("points_per_curve", cfg.points_per_curve);
  if (j.contains("material")) {
    const auto& m = j["material"];
    cfg.mat = Material(m.value("lam", 5.0), m.value("mu", 3.0),
                       m.value("rho", 2.5));
  }
  if (j.contains("pulse")) {
    const auto& p = j["pulse"];
    if (p.contains("direction"))
      cfg.direction = Vec2(p["direction"][0], p["direction"][1]);
    cfg.t0 = p.value("t0", cfg.t0);
    cfg.width = p.value("width", cfg.width);
  }
  cfg.T = j.value("T", cfg.T);
  cfg.M = j.value("M", cfg.M);
  if (j.contains("lattice")) {
    const auto& l = j["lattice"];
    cfg.lattice = {l.value("x0", -1.0), l.value("x1", 6.0),
                   l.value("y0", -1.0), l.value("y1", 5.0),
                   l.value("nx", 40),   l.value("ny", 32)};
  }
  cfg.frame_stride = j.value("frame_stride", cfg.frame_stride);
  return cfg;
}

SceneResult run_scattering_scene(const SceneConfig& cfg) {
  std::vector<GridData> parts;
  for (const auto& c : cfg.curves)
    parts.push_back(sample_closed(c, cfg.points_per_curve));
  const GridData g = concat_scenes(parts);
  const int N = g.N, M = cfg.M, L = M + 1;
  const double k = cfg.T / M, lamR = cq_radius(L);
  const Material& mat = cfg.mat;
  const PlanePulse pulse =
      smoothed_plane_pulse(mat, cfg.direction, cfg.t0, cfg.width);

  // nodal Dirichlet density of the scattered field: M phi^n = -beta0^n
  const Eigen::MatrixXd B0 = sample_pulse_dirichlet(g, pulse, k, M);
  Eigen::MatrixXd Phi(2 * N, L);
  for (int nn = 0; nn < L; ++nn)
    Phi.col(nn) = -mass_solve(g, B0.col(nn).cast<cplx>()).real();
  Eigen::MatrixXcd Phat = cq_scaled_dft(Phi, lamR);

  const Eigen::MatrixXd Mbig = mass_matrix(g);
  const BlockCirculant Q = matrix_Q(N);
  const std::vector<Vec2> obs = cfg.lattice.points();
  const int P = (int)obs.size();

  std::vector<int> frame_idx;
  for (int nn = 0; nn <= M; nn += cfg.frame_stride) frame_idx.push_back(nn);
  const int F = (int)frame_idx.size();

  // accumulate the inverse DFT only at the frame times, pairing l with L-l
  Eigen::MatrixXd frames = Eigen::MatrixXd::Zero(2 * P, F);
  for (int l = 0; l <= L / 2; ++l) {
    const cplx s = cq_frequency(l, L, lamR, k);
    const Operators ops = assemble_ops(g, s, mat, OP_V | OP_K);
    const Eigen::VectorXcd ph = Phat.col(l);
    const Eigen::VectorXcd xi =
        -0.5 * (Mbig * ph) + ops.K * ph;
    const Eigen::VectorXcd lam =
        Eigen::PartialPivLU<Eigen::MatrixXcd>(ops.V).solve(xi);
    const auto [S, D] = potential_SD(g, obs, s, mat, true, true);
    const Eigen::VectorXcd pheff = apply(Q, ph, g.offsets);
    const Eigen::VectorXcd Uhat = D * pheff - S * lam;
    const double c = (l == 0 || 2 * l == L) ? 1.0 / L : 2.0 / L;
    for (int f = 0; f < F; ++f) {
      const cplx phase = std::exp(
          cplx(0, 2 * std::numbers::pi * l * frame_idx[f] / (double)L));
      frames.col(f) += c * (Uhat * phase).real();
    }
  }
  for (int f = 0; f < F; ++f)
    frames.col(f) /= std::pow(lamR, frame_idx[f]);

  SceneResult res;
  for (int f = 0; f < F; ++f) res.frame_times.push_back(frame_idx[f] * k);

  // magnitudes, peak and the causality diagnostic: the scattered wave needs
  // t0 + (y.d)/cL to reach a boundary point y and |z - y|/cL to travel on
  const Vec2 d = cfg.direction.normalized();
  Eigen::MatrixXd mag(P, F);
  for (int f = 0; f < F; ++f)
    for (int p = 0; p < P; ++p)
      mag(p, f) = std::hypot(frames(p, f), frames(p + P, f));
  res.peak = mag.maxCoeff();
  for (int p = 0; p < P; ++p) {
    double t_arr = std::numeric_limits<double>::max();
    for (int j = 0; j < N; ++j)
      t_arr = std::min(t_arr, cfg.t0 + (g.m[j].dot(d) + (obs[p] - g.m[j]).norm()) /
                                           mat.cL);
    for (int f = 0; f < F; ++f)
      if (res.frame_times[f] < t_arr - 2 * k)
        res.pre_arrival_max = std::max(res.pre_arrival_max, mag(p, f));
  }

  if (!cfg.outdir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.outdir);
    for (int f = 0; f < F; ++f) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%04d.csv", f);
      const std::string path = (fs::path(cfg.outdir) / name).string();
      std::ofstream out(path);
      out.precision(8);
      for (int iy = 0; iy < cfg.lattice.ny; ++iy) {
        for (int ix = 0; ix < cfg.lattice.nx; ++ix) {
          if (ix) out << ',';
          out << mag(iy * cfg.lattice.nx + ix, f);
        }
        out << '\n';
      }
      res.frame_files.push_back(path);
    }
    nlohmann::json man;
    man["frame_times"] = res.frame_times;
    man["frames"] = res.frame_files;
    man["field"] = "scattered displacement magnitude";
    man["lattice"] = {{"x0", cfg.lattice.x0}, {"x1", cfg.lattice.x1},
                      {"y0", cfg.lattice.y0}, {"y1", cfg.lattice.y1},
                      {"nx", cfg.lattice.nx}, {"ny", cfg.lattice.ny}};
    man["material"] = {{"lam", mat.lam}, {"mu", mat.mu}, {"rho", mat.rho}};
    man["pulse"] = {{"direction", {d.x(), d.y()}},
                    {"t0", cfg.t0},
                    {"width", cfg.width}};
    man["T"] = cfg.T;
    man["M"] = M;
    man["points_per_curve"] = cfg.points_per_curve;
    man["peak"] = res.peak;
    man["pre_arrival_max"] = res.pre_arrival_max;
    const std::string mpath =
        (fs::path(cfg.outdir) / "manifest.json").string();
    std::ofstream mout(mpath);
    mout << man.dump(2) << '\n';
    res.manifest_file = mpath;
  }
  return res;
}

}  // namespace ebie
