#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclotile/complex.hpp"
#include "cyclotile/export.hpp"
#include "cyclotile/nc.hpp"
#include "cyclotile/nested.hpp"
#include "cyclotile/verify.hpp"

namespace {

using namespace cyclotile;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int env_cap(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (!value) return fallback;
  try {
    return std::stoi(value);
  } catch (...) {
    return fallback;
  }
}

std::string fmt_counts(const std::vector<long long>& xs) {
  std::string out = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

void print_poset(const FacePoset& poset, bool want_f, bool want_h,
                 const std::string& export_fmt) {
  if (want_h) {
    HVector h = h_vector(f_vector(poset));
    std::cout << fmt_counts(h.coeffs) << "\n";
  } else if (want_f || export_fmt.empty()) {
    std::cout << fmt_counts(f_vector(poset).counts) << "\n";
  }
  if (export_fmt == "json")
    std::cout << poset_to_json(poset) << "\n";
  else if (export_fmt == "dot")
    std::cout << poset_to_dot(poset) << "\n";
}

std::string surface_note(const CellComplex& c) {
  if (c.top_dim == 0) return "point(s)";
  if (!connected(c) || !pseudomanifold(c)) return "not-a-closed-manifold";
  if (c.top_dim == 1) return "circle";
  if (c.top_dim == 2) {
    SurfaceType s = classify_surface(c);
    if (s.orientable) return "orientable genus=" + std::to_string(s.parameter);
    return "non-orientable crosscaps=" + std::to_string(s.parameter);
  }
  return "not-determined (topDim>2)";
}

void print_complex_stats(const CellComplex& c) {
  std::cout << "cells " << fmt_counts(cell_counts(c)) << " chi=" << euler(c)
            << " pseudomanifold=" << (pseudomanifold(c) ? "yes" : "no")
            << " surface=" << surface_note(c) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dissection polytopes and the tiled moduli complexes they glue into"};
  app.require_subcommand(1);
  app.fallthrough();

  BuildLimits limits;
  limits.z_max = env_cap("CYCLOTILE_CAP_Z", limits.z_max);
  limits.m_max = env_cap("CYCLOTILE_CAP_M", limits.m_max);
  limits.cover_max = env_cap("CYCLOTILE_CAP_COVER", limits.cover_max);
  int ncb_cap = env_cap("CYCLOTILE_CAP_NCB", 5);
  app.add_option("--cap-z", limits.z_max, "largest n for the circle space");
  app.add_option("--cap-m", limits.m_max, "largest n for the projective-line space");
  app.add_option("--cap-cover", limits.cover_max, "largest n for the barred cover");
  app.add_option("--cap-ncb", ncb_cap, "largest n for signed partition counts");

  // polytope
  auto* polytope = app.add_subcommand("polytope", "face lattice of one polytope");
  std::string poly_kind;
  int poly_n = 3;
  bool poly_f = false, poly_h = false;
  std::string poly_export;
  polytope->add_option("kind", poly_kind, "assoc | cyclo")
      ->required()
      ->check(CLI::IsMember({"assoc", "cyclo"}));
  polytope->add_option("--n", poly_n, "polytope index")->required();
  polytope->add_flag("--fvector", poly_f, "print the f-vector");
  polytope->add_flag("--hvector", poly_h, "print the h-vector");
  polytope->add_option("--export", poly_export, "json | dot")
      ->check(CLI::IsMember({"json", "dot"}));

  // tubing
  auto* tubing = app.add_subcommand("tubing", "tubing poset of a path or cycle diagram");
  std::string tubing_kind;
  int tubing_n = 3;
  bool tubing_f = false, tubing_h = false;
  std::string tubing_export;
  tubing->add_option("kind", tubing_kind, "path | cycle")
      ->required()
      ->check(CLI::IsMember({"path", "cycle"}));
  tubing->add_option("--n", tubing_n, "node count")->required();
  tubing->add_flag("--fvector", tubing_f, "print the f-vector");
  tubing->add_flag("--hvector", tubing_h, "print the h-vector");
  tubing->add_option("--export", tubing_export, "json | dot")
      ->check(CLI::IsMember({"json", "dot"}));

  // moduli
  auto* moduli = app.add_subcommand("moduli", "glued cell complex of a moduli space");
  std::string moduli_kind;
  int moduli_n = 3;
  bool moduli_stats = false;
  std::string moduli_export;
  moduli->add_option("kind", moduli_kind, "m0 | z | cover")
      ->required()
      ->check(CLI::IsMember({"m0", "z", "cover"}));
  moduli->add_option("--n", moduli_n, "number of marked points")->required();
  moduli->add_flag("--stats", moduli_stats, "print cell counts, chi, surface type");
  moduli->add_option("--export", moduli_export, "json | dot")
      ->check(CLI::IsMember({"json", "dot"}));

  // strata
  auto* strata = app.add_subcommand("strata", "product strata census of the circle space");
  int strata_n = 3, strata_k = 1;
  strata->add_option("--n", strata_n, "number of marked points")->required();
  strata->add_option("--k", strata_k, "stratum codimension")->required();

  // nc
  auto* nc = app.add_subcommand("nc", "non-crossing partition counts");
  int nc_n = 3;
  std::string nc_type = "a";
  nc->add_option("--n", nc_n, "ground set size")->required();
  nc->add_option("--type", nc_type, "a | b")->check(CLI::IsMember({"a", "b"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  std::vector<std::string> suites;
  int verify_max_n = 0;
  verify->add_option("--suite", suites,
                     "suite name (repeatable; 'none' for an empty report)");
  verify->add_option("--max-n", verify_max_n, "clamp every suite's n range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*polytope) {
      FacePoset poset = poly_kind == "assoc" ? associahedron(poly_n) : cyclohedron(poly_n);
      print_poset(poset, poly_f, poly_h, poly_export);
    } else if (*tubing) {
      Diagram d{tubing_kind == "path" ? DiagramKind::Path : DiagramKind::Cycle, tubing_n};
      print_poset(tubing_poset(d), tubing_f, tubing_h, tubing_export);
    } else if (*moduli) {
      BuildOptions opts{limits, std::nullopt};
      CellComplex c;
      if (moduli_kind == "m0")
        c = build_complex(Space::M, moduli_n, opts);
      else if (moduli_kind == "z")
        c = build_complex(Space::Z, moduli_n, opts);
      else
        c = build_cover_complex(moduli_n, opts);
      if (moduli_stats || moduli_export.empty()) {
        print_complex_stats(c);
        if (moduli_kind == "cover") {
          long long base_tiles = 1;
          for (int i = 2; i < moduli_n; ++i) base_tiles *= i;
          std::cout << "tiles=" << c.tile_polys.size()
                    << " fold=" << static_cast<long long>(c.tile_polys.size()) / base_tiles
                    << "\n";
        }
      }
      if (moduli_export == "json")
        std::cout << complex_to_json(c) << "\n";
      else if (moduli_export == "dot")
        std::cout << complex_to_dot(c) << "\n";
    } else if (*strata) {
      BuildOptions opts{limits, std::nullopt};
      nlohmann::json out = nlohmann::json::array();
      for (const Stratum& s : strata_census(strata_n, strata_k, opts)) {
        nlohmann::json entry;
        entry["labels"] = s.label_set;
        entry["cells"] = cell_counts(s.complex);
        entry["chi"] = euler(s.complex);
        out.push_back(std::move(entry));
      }
      std::cout << out.dump() << "\n";
    } else if (*nc) {
      nlohmann::json out;
      out["n"] = nc_n;
      out["type"] = nc_type;
      std::vector<long long> counts;
      if (nc_type == "a") {
        for (int k = 1; k <= nc_n; ++k) counts.push_back(count_nc_a(nc_n, k));
      } else {
        if (nc_n > ncb_cap)
          throw ResourceError("signed partitions n=" + std::to_string(nc_n) +
                              " exceeds cap " + std::to_string(ncb_cap) +
                              " (raise with --cap-ncb or CYCLOTILE_CAP_NCB)");
        for (int k = 0; k <= nc_n; ++k) counts.push_back(count_nc_b(nc_n, k));
      }
      out["counts"] = counts;
      std::cout << out.dump() << "\n";
    } else if (*verify) {
      VerifyOptions opts;
      opts.suites = suites;
      if (verify_max_n > 0) opts.max_n = verify_max_n;
      opts.limits = limits;
      VerificationReport report = run_verify(opts);
      std::cout << report_to_json(report) << "\n";
      for (const VerifyEntry& e : report.entries)
        if (!e.pass)
          std::cerr << "FAIL " << e.suite << "/" << e.name << ": expected " << e.target
                    << ", got " << e.computed << "\n";
      return report.overall() ? 0 : kExitFail;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
