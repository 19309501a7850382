// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "slfem/runner.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

namespace slfem {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

const char* status_string(const PointResult& r) {
  if (r.solver_failed) return "failed";
  switch (r.picard.status) {
    case PicardStatus::ConvergedTol: return "converged_tol";
    case PicardStatus::Stagnated: return "stagnated";
    case PicardStatus::MaxIter: return "max_iter";
  }
  return "?";
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ManifestEntry {
  std::string path;
  CaseMetadata meta;
  std::string status;
  std::uint64_t hash;
};

void write_manifest(const fs::path& file, const std::vector<ManifestEntry>& entries) {
  std::ofstream os(file);
  char buf[512];
  for (const auto& e : entries) {
    std::snprintf(buf, sizeof(buf),
                  "artifact path=%s case=%s alpha=%s beta=%s sigma_t=%s "
                  "fiber=%s load=%s nx=%d ny=%d status=%s hash=%016llx\n",
                  e.path.c_str(), e.meta.case_name.c_str(),
                  fmt(e.meta.alpha).c_str(), fmt(e.meta.beta).c_str(),
                  fmt(e.meta.sigma_t).c_str(), to_string(e.meta.fiber),
                  to_string(e.meta.load), e.meta.nx, e.meta.ny,
                  e.status.c_str(),
                  static_cast<unsigned long long>(e.hash));
    os << buf;
  }
}

// Runs fn(i) for i in [0, count) on cfg.threads workers.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::vector<double> sweep_values(const std::vector<double>& list, double single) {
  return list.empty() ? std::vector<double>{single} : list;
}

}  // namespace

std::string param_signature(double alpha, double beta, double sigma_t) {
  return "alpha" + fmt(alpha) + "_beta" + fmt(beta) + "_sigma" + fmt(sigma_t);
}

std::uint64_t fnv1a_hash(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

PointResult run_point(const QuadMesh& mesh, const RunConfig& cfg, double alpha,
                      double beta, double sigma_t) {
  MaterialParams mp = cfg.material;
  mp.alpha = alpha;
  mp.beta = beta;
  const MaterialModel material(mp);
  LoadProfile profile = cfg.load;
  profile.sigma_t = sigma_t;
  const LoadCase load = LoadCase::benchmark(mesh, profile);

  PointResult result;
  result.meta = {to_string(cfg.kind), alpha,   beta,
                 sigma_t,             mp.fiber_axis, profile.type,
                 mesh.nx(),           mesh.ny()};
  try {
    result.picard = run_picard(mesh, material, load, cfg.solver, cfg.picard);
  } catch (const PicardFailure& failure) {
    result.picard = failure.partial();
    result.solver_failed = true;
    result.failure_message = failure.what();
    return result;
  }
  result.report = make_field_report(mesh, material, result.picard.u, result.meta);
  return result;
}

int run_command(const RunConfig& cfg, std::ostream& log) {
  const QuadMesh mesh =
      build_plate_mesh(cfg.mesh.width, cfg.mesh.height, cfg.mesh.crack_length,
                       cfg.mesh.nx, cfg.mesh.ny, cfg.mesh.grading);

  const auto alphas = sweep_values(cfg.sweep.alpha, cfg.material.alpha);
  const auto betas = sweep_values(cfg.sweep.beta, cfg.material.beta);
  const auto sigmas = sweep_values(cfg.sweep.sigma_t, cfg.load.sigma_t);

  struct Point {
    double alpha, beta, sigma;
  };
  std::vector<Point> points;
  for (const double a : alphas)
    for (const double b : betas)
      for (const double s : sigmas) points.push_back({a, b, s});

  std::vector<PointResult> results(points.size());
  parallel_for(static_cast<int>(points.size()), cfg.threads, [&](int i) {
    results[i] = run_point(mesh, cfg, points[i].alpha, points[i].beta,
                           points[i].sigma);
  });

  const fs::path root(cfg.output_dir);
  std::vector<ManifestEntry> manifest;
  bool all_ok = true;

  for (size_t i = 0; i < points.size(); ++i) {
    const auto& r = results[i];
    const fs::path dir =
        root / r.meta.case_name /
        param_signature(points[i].alpha, points[i].beta, points[i].sigma);
    fs::create_directories(dir);

    const auto emit = [&](const char* name, const auto& writer) {
      const fs::path file = dir / name;
      {
        std::ofstream os(file);
        writer(os);
      }
      manifest.push_back({fs::relative(file, root).generic_string(), r.meta,
                          status_string(r), fnv1a_hash(read_file(file))});
    };

    emit("convergence.csv",
         [&](std::ostream& os) { write_convergence_csv(r.picard, os); });
    if (!r.solver_failed) {
      emit("profile.csv",
           [&](std::ostream& os) { write_profile_csv(r.report, os); });
      emit("opening.csv",
           [&](std::ostream& os) { write_opening_csv(r.report, os); });
      emit("fields.vtk", [&](std::ostream& os) {
        MaterialParams mp = cfg.material;
        mp.alpha = points[i].alpha;
        mp.beta = points[i].beta;
        const NodalFields fields =
            recover_fields(mesh, MaterialModel(mp), r.picard.u);
        write_vtk_fields(mesh, fields, r.picard.u, os);
      });
    }

    const bool ok = !r.solver_failed && (r.picard.status == PicardStatus::ConvergedTol ||
                                         r.picard.status == PicardStatus::Stagnated);
    all_ok = all_ok && ok;
    log << r.meta.case_name << "/"
        << param_signature(points[i].alpha, points[i].beta, points[i].sigma)
        << ": " << status_string(r);
    if (!r.picard.residual_history.empty())
      log << " (residual " << r.picard.residual_history.back().norm << " after "
          << r.picard.residual_history.size() << " iterations)";
    if (r.solver_failed) log << " [" << r.failure_message << "]";
    log << "\n";
  }

  write_manifest(root / "manifest.txt", manifest);
  return all_ok ? 0 : 1;
}

int compare_loads_command(const RunConfig& cfg, std::ostream& log) {
  const QuadMesh mesh =
      build_plate_mesh(cfg.mesh.width, cfg.mesh.height, cfg.mesh.crack_length,
                       cfg.mesh.nx, cfg.mesh.ny, cfg.mesh.grading);

  struct Entry {
    LoadType load;
    double sigma;
  };
  std::vector<Entry> entries;
  for (const double s : cfg.compare_sigma_t)
    for (const LoadType l : cfg.compare_loads) entries.push_back({l, s});

  std::vector<PointResult> results(entries.size());
  parallel_for(static_cast<int>(entries.size()), cfg.threads, [&](int i) {
    RunConfig point_cfg = cfg;
    point_cfg.load.type = entries[i].load;
    results[i] = run_point(mesh, point_cfg, cfg.material.alpha,
                           cfg.material.beta, entries[i].sigma);
  });

  const fs::path root(cfg.output_dir);
  fs::create_directories(root);
  std::vector<ManifestEntry> manifest;
  bool all_ok = true;
  char buf[160];

  std::ofstream summary(root / "summary.csv");
  summary << "sigma_t,load,peak_sigma_yy,peak_eps_yy,peak_energy\n";

  for (const double s : cfg.compare_sigma_t) {
    std::vector<const PointResult*> row;
    for (size_t i = 0; i < entries.size(); ++i)
      if (entries[i].sigma == s) row.push_back(&results[i]);

    const fs::path file = root / ("compare_sigma" + fmt(s) + ".csv");
    {
      std::ofstream os(file);
      os << "# sigma_t=" << fmt(s) << " fiber="
         << to_string(cfg.material.fiber_axis) << " nx=" << mesh.nx()
         << " ny=" << mesh.ny() << "\n";
      os << "x";
      for (const auto* r : row)
        os << ",sigma_yy_" << to_string(r->meta.load) << ",eps_yy_"
           << to_string(r->meta.load);
      os << "\n";
      if (!row.empty()) {
        const size_t n = row.front()->report.profile.size();
        for (size_t k = 0; k < n; ++k) {
          std::snprintf(buf, sizeof(buf), "%.17g",
                        row.front()->report.profile[k].x);
          os << buf;
          for (const auto* r : row) {
            std::snprintf(buf, sizeof(buf), ",%.17g,%.17g",
                          r->report.profile[k].sigma_yy,
                          r->report.profile[k].eps_yy);
            os << buf;
          }
          os << "\n";
        }
      }
    }

    for (const auto* r : row) {
      all_ok = all_ok && !r->solver_failed &&
               r->picard.status != PicardStatus::MaxIter;
      std::snprintf(buf, sizeof(buf), "%s,%s,%.17g,%.17g,%.17g\n",
                    fmt(s).c_str(), to_string(r->meta.load),
                    peak_stress(r->report.profile),
                    peak_strain(r->report.profile),
                    peak_energy(r->report.profile));
      summary << buf;
      log << "sigma_t=" << fmt(s) << " load=" << to_string(r->meta.load)
          << ": " << status_string(*r) << "\n";
    }
    manifest.push_back({fs::relative(file, root).generic_string(),
                        row.empty() ? CaseMetadata{} : row.front()->meta,
                        "written", fnv1a_hash(read_file(file))});
  }
  summary.close();
  manifest.push_back({"summary.csv", CaseMetadata{}, "written",
                      fnv1a_hash(read_file(root / "summary.csv"))});
  write_manifest(root / "manifest.txt", manifest);
  return all_ok ? 0 : 1;
}

int mesh_info_command(const RunConfig& cfg, std::ostream& out) {
  const QuadMesh mesh =
      build_plate_mesh(cfg.mesh.width, cfg.mesh.height, cfg.mesh.crack_length,
                       cfg.mesh.nx, cfg.mesh.ny, cfg.mesh.grading);
  std::map<BoundaryTag, int> tag_count;
  for (const auto& e : mesh.boundary_edges()) ++tag_count[e.tag];
  out << "nodes: " << mesh.num_nodes() << "\n"
      << "elements: " << mesh.num_elements() << "\n"
      << "dofs: " << mesh.num_dofs() << "\n"
      << "h_max: " << mesh.h_max() << "\n"
      << "h_min: " << mesh.h_min() << "\n"
      << "crack_tip: (" << mesh.crack_tip().x << ", " << mesh.crack_tip().y
      << ")\n"
      << "edges right: " << tag_count[BoundaryTag::Right] << "\n"
      << "edges crack: " << tag_count[BoundaryTag::Crack] << "\n"
      << "edges bottom_ligament: " << tag_count[BoundaryTag::BottomLigament]
      << "\n"
      << "edges top: " << tag_count[BoundaryTag::Top] << "\n"
      << "edges left: " << tag_count[BoundaryTag::Left] << "\n";
  const fs::path root(cfg.output_dir);
  fs::create_directories(root);
  std::ofstream os(root / "mesh.vtk");
  write_vtk_mesh(mesh, os);
  return 0;
}

}  // namespace slfem
