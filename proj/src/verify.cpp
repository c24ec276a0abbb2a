#include "cyclotile/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

#include "cyclotile/complex.hpp"
#include "cyclotile/nc.hpp"
#include "cyclotile/nested.hpp"
#include "cyclotile/poset.hpp"

namespace cyclotile {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

long long catalan(int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[n];
}

template <typename T>
std::string fmt_list(const std::vector<T>& xs) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "]";
  return os.str();
}

std::vector<long long> convolve(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

struct Runner {
  const VerifyOptions& opts;
  VerificationReport& report;

  bool selected(const std::string& suite) const {
    if (opts.suites.empty()) return true;
    for (const std::string& s : opts.suites)
      if (s == suite) return true;
    return false;
  }

  int upto(int def) const { return opts.max_n ? std::min(def, *opts.max_n) : def; }

  using Check = std::function<std::pair<std::string, bool>()>;

  void add(const std::string& suite, const std::string& name,
           const std::string& target, const Check& check) {
    if (!selected(suite)) return;
    VerifyEntry entry;
    entry.suite = suite;
    entry.name = name;
    entry.target = target;
    auto start = std::chrono::steady_clock::now();
    try {
      auto [computed, pass] = check();
      entry.computed = computed;
      entry.pass = pass;
    } catch (const std::exception& e) {
      entry.computed = std::string("exception: ") + e.what();
      entry.pass = false;
    }
    entry.ms = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    report.entries.push_back(std::move(entry));
  }
};

std::pair<std::string, bool> expect_counts(const std::vector<long long>& got,
                                           const std::vector<long long>& want) {
  return {fmt_list(got), got == want};
}

}  // namespace

bool VerificationReport::overall() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const VerifyEntry& e) { return e.pass; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "polytope", "tiling",      "complex", "incidence", "stratum",
      "truncation", "arrangement", "nc",      "cover",     "property"};
  return names;
}

VerificationReport run_verify(const VerifyOptions& opts) {
  VerificationReport report;
  Runner run{opts, report};
  const BuildOptions build_opts{opts.limits, std::nullopt};

  // ---- polytope ----
  run.add("polytope", "f-K4", "[5,5,1] (pentagon face counts)", [&] {
    return expect_counts(f_vector(associahedron(4)).counts, {5, 5, 1});
  });
  run.add("polytope", "f-W3", "[6,6,1] (hexagon face counts)", [&] {
    return expect_counts(f_vector(cyclohedron(3)).counts, {6, 6, 1});
  });
  run.add("polytope", "f-K5", "[14,21,9,1] (hexagon dissection census)", [&] {
    return expect_counts(f_vector(associahedron(5)).counts, {14, 21, 9, 1});
  });
  run.add("polytope", "f-W4", "[20,30,12,1] (symmetric 8-gon dissection census)", [&] {
    return expect_counts(f_vector(cyclohedron(4)).counts, {20, 30, 12, 1});
  });
  {
    int hi = run.upto(8);
    run.add("polytope", "assoc-vertices",
            "Catalan(n-1) triangulation counts, n<=" + std::to_string(hi), [&, hi] {
              std::vector<long long> got, want;
              for (int n = 2; n <= hi; ++n) {
                got.push_back(f_vector(associahedron(n)).counts[0]);
                want.push_back(catalan(n - 1));
              }
              return std::make_pair(fmt_list(got), got == want);
            });
  }
  {
    int hi = run.upto(7);
    run.add("polytope", "cyclo-vertices",
            "central binomial (2n-2 choose n-1), n<=" + std::to_string(hi), [&, hi] {
              std::vector<long long> got, want;
              for (int n = 1; n <= hi; ++n) {
                got.push_back(f_vector(cyclohedron(n)).counts[0]);
                want.push_back(binomial(2 * n - 2, n - 1));
              }
              return std::make_pair(fmt_list(got), got == want);
            });
  }

  // ---- tiling ----
  {
    int hi = run.upto(5);
    run.add("tiling", "tiles-Z", "(n-1)! labeled 2n-gons up to rotation, n<=" +
                                     std::to_string(hi), [&, hi] {
      std::vector<long long> got, want;
      for (int n = 1; n <= hi; ++n) {
        got.push_back(static_cast<long long>(tiles(Space::Z, n).size()));
        want.push_back(factorial(n - 1));
      }
      return std::make_pair(fmt_list(got), got == want);
    });
  }
  {
    int hi = run.upto(6);
    run.add("tiling", "tiles-M", "(n-1)!/2 labeled n-gons up to dihedral, n<=" +
                                     std::to_string(hi), [&, hi] {
      std::vector<long long> got, want;
      for (int n = 3; n <= hi; ++n) {
        got.push_back(static_cast<long long>(tiles(Space::M, n).size()));
        want.push_back(factorial(n - 1) / 2);
      }
      return std::make_pair(fmt_list(got), got == want);
    });
  }

  // ---- complex ----
  run.add("complex", "Z2", "cells [1,1], chi=0, circle", [&] {
    CellComplex c = build_complex(Space::Z, 2, build_opts);
    bool ok = cell_counts(c) == std::vector<long long>{1, 1} && euler(c) == 0 &&
              connected(c) && pseudomanifold(c);
    std::ostringstream os;
    os << "cells " << fmt_list(cell_counts(c)) << " chi=" << euler(c);
    return std::make_pair(os.str(), ok);
  });
  run.add("complex", "Z3", "2 tiles, cells [3,6,2], chi=-1, non-orientable 3 crosscaps",
          [&] {
            CellComplex c = build_complex(Space::Z, 3, build_opts);
            SurfaceType s = classify_surface(c);
            bool ok = cell_counts(c) == std::vector<long long>{3, 6, 2} &&
                      c.cells[2].size() == 2 && euler(c) == -1 && !s.orientable &&
                      s.parameter == 3;
            std::ostringstream os;
            os << "cells " << fmt_list(cell_counts(c)) << " chi=" << euler(c)
               << (s.orientable ? " orientable " : " non-orientable ") << s.parameter;
            return std::make_pair(os.str(), ok);
          });
  run.add("complex", "Z4", "6 tiles, chi=0, pseudomanifold", [&] {
    CellComplex c = build_complex(Space::Z, 4, build_opts);
    bool ok = c.cells[3].size() == 6 && euler(c) == 0 && pseudomanifold(c);
    std::ostringstream os;
    os << "tiles " << c.cells[3].size() << " chi=" << euler(c)
       << " pm=" << (pseudomanifold(c) ? "yes" : "no");
    return std::make_pair(os.str(), ok);
  });
  run.add("complex", "M4", "circle of 3 segments (cells [3,3])", [&] {
    CellComplex c = build_complex(Space::M, 4, build_opts);
    bool ok = cell_counts(c) == std::vector<long long>{3, 3} && euler(c) == 0 &&
              connected(c) && pseudomanifold(c);
    return std::make_pair("cells " + fmt_list(cell_counts(c)), ok);
  });
  run.add("complex", "M5",
          "12 pentagons, cells [15,30,12], chi=-3, non-orientable 5 crosscaps", [&] {
            CellComplex c = build_complex(Space::M, 5, build_opts);
            SurfaceType s = classify_surface(c);
            bool ok = cell_counts(c) == std::vector<long long>{15, 30, 12} &&
                      euler(c) == -3 && !s.orientable && s.parameter == 5;
            std::ostringstream os;
            os << "cells " << fmt_list(cell_counts(c)) << " chi=" << euler(c)
               << (s.orientable ? " orientable " : " non-orientable ") << s.parameter;
            return std::make_pair(os.str(), ok);
          });

  // ---- incidence ----
  run.add("incidence", "pseudomanifold-all",
          "every built complex has 2-sided codim-1 cells", [&] {
            std::vector<std::string> bad;
            for (int n = 1; n <= run.upto(opts.limits.z_max); ++n)
              if (!pseudomanifold(build_complex(Space::Z, n, build_opts)))
                bad.push_back("Z" + std::to_string(n));
            for (int n = 3; n <= run.upto(opts.limits.m_max); ++n)
              if (!pseudomanifold(build_complex(Space::M, n, build_opts)))
                bad.push_back("M" + std::to_string(n));
            return std::make_pair(bad.empty() ? std::string("all 2-sided")
                                              : "failed: " + fmt_list(bad),
                                  bad.empty());
          });
  run.add("incidence", "M5-codim-k", "2^k slots at every codim-k cell, k=1,2", [&] {
    CellComplex c = build_complex(Space::M, 5, build_opts);
    bool ok = codim_incidence(c, 1) && codim_incidence(c, 2);
    return std::make_pair(std::string(ok ? "2^k everywhere" : "violated"), ok);
  });
  run.add("incidence", "Z3-codim-k",
          "2^k slot multiplicity at every codim-k cell, k=1,2", [&] {
            CellComplex c = build_complex(Space::Z, 3, build_opts);
            bool ok = codim_incidence(c, 1) && codim_incidence(c, 2);
            return std::make_pair(std::string(ok ? "2^k everywhere" : "violated"), ok);
          });

  // ---- stratum ----
  for (int n : {3, 4}) {
    if (n > run.upto(4)) continue;
    for (int k = 1; k <= n - 1; ++k) {
      std::string name = "strata-n" + std::to_string(n) + "-k" + std::to_string(k);
      run.add("stratum", name,
              "(n choose k+1) strata, each f-vector a product of factor f-vectors",
              [&, n, k] {
                std::vector<Stratum> strata = strata_census(n, k, build_opts);
                bool ok = static_cast<long long>(strata.size()) == binomial(n, k + 1);
                std::vector<long long> fM =
                    cell_counts(build_complex(Space::M, k + 2, build_opts));
                std::vector<long long> fZ =
                    cell_counts(build_complex(Space::Z, n - k, build_opts));
                std::vector<long long> want = convolve(fM, fZ);
                std::string first;
                for (const Stratum& s : strata) {
                  std::vector<long long> f = cell_counts(s.complex);
                  if (first.empty()) first = fmt_list(f);
                  if (f != want) ok = false;
                }
                return std::make_pair(std::to_string(strata.size()) + " strata, f=" +
                                          first + " want " + fmt_list(want),
                                      ok);
              });
    }
  }
  if (run.upto(4) >= 4)
    run.add("stratum", "strata-n4-k2-tori", "each stratum an orientable genus-1 surface",
            [&] {
              bool ok = true;
              for (const Stratum& s : strata_census(4, 2, build_opts)) {
                SurfaceType t = classify_surface(s.complex);
                if (!t.orientable || t.parameter != 1) ok = false;
              }
              return std::make_pair(std::string(ok ? "all tori" : "not all tori"), ok);
            });

  // ---- truncation ----
  {
    int hi = run.upto(4);
    run.add("truncation", "path-tubings",
            "tubing poset of the n-path matches the (n+1)-associahedron, n<=" +
                std::to_string(hi),
            [&, hi] {
              for (int n = 1; n <= hi; ++n)
                if (!poset_iso(tubing_poset({DiagramKind::Path, n}), associahedron(n + 1)))
                  return std::make_pair("mismatch at n=" + std::to_string(n), false);
              return std::make_pair(std::string("isomorphic"), true);
            });
  }
  {
    int hi = run.upto(5);
    run.add("truncation", "cycle-tubings",
            "tubing poset of the n-cycle matches the n-cyclohedron, 3<=n<=" +
                std::to_string(hi),
            [&, hi] {
              for (int n = 3; n <= hi; ++n)
                if (!poset_iso(tubing_poset({DiagramKind::Cycle, n}), cyclohedron(n)))
                  return std::make_pair("mismatch at n=" + std::to_string(n), false);
              return std::make_pair(std::string("isomorphic"), true);
            });
  }
  if (run.upto(6) >= 6)
    run.add("truncation", "cycle-f6", "equal f-vectors at n=6", [&] {
      FVector a = f_vector(tubing_poset({DiagramKind::Cycle, 6}));
      FVector b = f_vector(cyclohedron(6));
      return std::make_pair(fmt_list(a.counts), a.counts == b.counts);
    });

  // ---- arrangement ----
  run.add("arrangement", "chambers-linear-3", "12 projective chambers", [&] {
    long long got = chamber_count({ArrangementKind::Linear, 3});
    return std::make_pair(std::to_string(got), got == 12);
  });
  run.add("arrangement", "chambers-affine-3", "2 torus chambers", [&] {
    long long got = chamber_count({ArrangementKind::Affine, 3});
    return std::make_pair(std::to_string(got), got == 2);
  });
  run.add("arrangement", "chambers-affine-4", "6 torus chambers", [&] {
    long long got = chamber_count({ArrangementKind::Affine, 4});
    return std::make_pair(std::to_string(got), got == 6);
  });
  {
    int hi = run.upto(6);
    run.add("arrangement", "building-affine",
            "(n choose k+1) minimal cells by enumeration, n<=" + std::to_string(hi),
            [&, hi] {
              for (int n = 2; n <= hi; ++n)
                for (int k = 1; k <= n - 1; ++k)
                  if (building_set_count({ArrangementKind::Affine, n}, k) !=
                      binomial(n, k + 1))
                    return std::make_pair(
                        "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k),
                        false);
              return std::make_pair(std::string("all match"), true);
            });
  }
  run.add("arrangement", "building-linear-3-2", "4 triple intersections", [&] {
    long long got = building_set_count({ArrangementKind::Linear, 3}, 2);
    return std::make_pair(std::to_string(got), got == 4);
  });

  // ---- nc ----
  {
    int hi = run.upto(7);
    run.add("nc", "identity-A",
            "non-crossing counts equal associahedron h-vector, n<=" + std::to_string(hi),
            [&, hi] {
              for (int n = 2; n <= hi; ++n)
                if (!verify_identity_a(n))
                  return std::make_pair("failed at n=" + std::to_string(n), false);
              return std::make_pair(std::string("holds"), true);
            });
  }
  {
    int hi = run.upto(5);
    run.add("nc", "identity-B",
            "signed non-crossing counts equal cyclohedron h-vector, n<=" +
                std::to_string(hi),
            [&, hi] {
              for (int n = 1; n <= hi; ++n)
                if (!verify_identity_b(n))
                  return std::make_pair("failed at n=" + std::to_string(n), false);
              return std::make_pair(std::string("holds"), true);
            });
  }

  // ---- cover ----
  run.add("cover", "cover3-tiles", "8 hexagon tiles", [&] {
    long long got = static_cast<long long>(cover_tiles(3).size());
    return std::make_pair(std::to_string(got), got == 8);
  });
  run.add("cover", "cover3-fold", "4-fold over the 2-tile hexagon space", [&] {
    long long fold = static_cast<long long>(cover_tiles(3).size()) / factorial(2);
    return std::make_pair(std::to_string(fold), fold == 4);
  });

  // ---- property ----
  run.add("property", "twist-involution", "raw twists square to the identity (1000 runs)",
          [&] {
            std::mt19937_64 rng(20230607);
            std::map<std::pair<int, int>, std::vector<Dissection>> plain_cache, sym_cache;
            int runs = 0;
            for (int iter = 0; iter < 1000; ++iter) {
              bool plain = iter % 2 == 0;
              if (plain) {
                int m = 4 + static_cast<int>(rng() % 6);
                int k = 1 + static_cast<int>(rng() % (m - 3));
                auto& pool = plain_cache[{m, k}];
                if (pool.empty()) pool = enum_dissections(m, k);
                const Dissection& d = pool[rng() % pool.size()];
                std::vector<Label> labels(m);
                for (int i = 0; i < m; ++i) labels[i] = i + 1;
                std::shuffle(labels.begin(), labels.end(), rng);
                DissectedPolygon s{LabeledPolygon::plain(labels), d};
                const ChordClass& cc = d.classes[rng() % d.classes.size()];
                if (detail::raw_twist(detail::raw_twist(s, cc), cc) != s)
                  return std::make_pair(std::string("plain twist not an involution"), false);
              } else {
                int n = 2 + static_cast<int>(rng() % 5);
                int k = 1 + static_cast<int>(rng() % (n - 1));
                auto& pool = sym_cache[{n, k}];
                if (pool.empty()) pool = enum_sym_dissections(n, k);
                const Dissection& d = pool[rng() % pool.size()];
                std::vector<Label> half(n);
                for (int i = 0; i < n; ++i) half[i] = i + 1;
                std::shuffle(half.begin(), half.end(), rng);
                std::vector<Label> labels = half;
                labels.insert(labels.end(), half.begin(), half.end());
                DissectedPolygon s{LabeledPolygon::symmetric(labels), d};
                const ChordClass& cc = d.classes[rng() % d.classes.size()];
                if (detail::raw_twist(detail::raw_twist(s, cc), cc) != s)
                  return std::make_pair(std::string("symmetric twist not an involution"),
                                        false);
              }
              ++runs;
            }
            return std::make_pair(std::to_string(runs) + " runs", true);
          });
  run.add("property", "canonicalize-orbit",
          "idempotent and constant across random group translates", [&] {
            std::mt19937_64 rng(987654);
            for (int iter = 0; iter < 400; ++iter) {
              int m = 4 + static_cast<int>(rng() % 5);
              int k = static_cast<int>(rng() % (m - 2));
              auto pool = enum_dissections(m, k);
              const Dissection& d = pool[rng() % pool.size()];
              std::vector<Label> labels(m);
              for (int i = 0; i < m; ++i) labels[i] = i + 1;
              std::shuffle(labels.begin(), labels.end(), rng);
              SymmetryGroup g{iter % 2 ? GroupKind::Dihedral : GroupKind::RotationsOnly, m};
              DissectedPolygon s{LabeledPolygon::plain(labels), d};
              DissectedPolygon c = canonicalize(s, g);
              if (canonicalize(c, g) != c)
                return std::make_pair(std::string("not idempotent"), false);
              auto elems = elements(g);
              for (int j = 0; j < 4; ++j) {
                const GroupElement& e = elems[rng() % elems.size()];
                if (canonicalize(apply(e, s), g) != c)
                  return std::make_pair(std::string("orbit member diverged"), false);
              }
            }
            return std::make_pair(std::string("400 runs"), true);
          });
  run.add("property", "crosses-symmetry", "crosses(a,b) == crosses(b,a)", [&] {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 2000; ++iter) {
      int m = 4 + static_cast<int>(rng() % 9);
      auto pool = chord_classes(m, LabelMode::Plain);
      Chord a = pool[rng() % pool.size()].members[0];
      Chord b = pool[rng() % pool.size()].members[0];
      if (crosses(a, b, m) != crosses(b, a, m))
        return std::make_pair(std::string("asymmetric"), false);
    }
    return std::make_pair(std::string("2000 runs"), true);
  });
  run.add("property", "assembly-determinism",
          "complexes identical under shuffled processing order", [&] {
            auto snapshot = [&](Space s, int n, std::optional<std::uint64_t> seed) {
              BuildOptions o{opts.limits, seed};
              CellComplex c = build_complex(s, n, o);
              std::ostringstream os;
              for (const auto& layer : c.cells)
                for (const CellClass& cell : layer) os << fmt_list(encode(cell.rep)) << ";";
              for (const Incidence& inc : c.incidences)
                os << inc.dim << "," << inc.cell << "," << inc.tile << ","
                   << fmt_list(face_key(inc.slot)) << ";";
              for (const auto& word : c.boundary) {
                for (const auto& step : word)
                  os << step.edge_cell << ":" << step.direction << ",";
                os << "|";
              }
              return os.str();
            };
            for (Space s : {Space::Z, Space::M}) {
              int n = s == Space::Z ? 3 : 5;
              std::string base = snapshot(s, n, std::nullopt);
              for (std::uint64_t seed : {1ull, 7ull, 99ull})
                if (snapshot(s, n, seed) != base)
                  return std::make_pair(std::string("order-dependent output"), false);
            }
            return std::make_pair(std::string("stable across shuffles"), true);
          });
  {
    int hi = run.upto(8);
    run.add("property", "nc-catalan-sum",
            "non-crossing partitions sum to Catalan numbers, n<=" + std::to_string(hi),
            [&, hi] {
              for (int n = 1; n <= hi; ++n) {
                long long total = 0;
                for (int k = 1; k <= n; ++k) total += count_nc_a(n, k);
                if (total != catalan(n))
                  return std::make_pair("mismatch at n=" + std::to_string(n), false);
              }
              return std::make_pair(std::string("matches"), true);
            });
  }
  run.add("property", "nc-rank-symmetry",
          "NC(n,k)=NC(n,n+1-k) for n<=7 and NC_B(n,k)=NC_B(n,n-k) for n<=5", [&] {
            for (int n = 1; n <= run.upto(7); ++n)
              for (int k = 1; k <= n; ++k)
                if (count_nc_a(n, k) != count_nc_a(n, n + 1 - k))
                  return std::make_pair("type A broke at n=" + std::to_string(n), false);
            for (int n = 1; n <= run.upto(5); ++n)
              for (int k = 0; k <= n; ++k)
                if (count_nc_b(n, k) != count_nc_b(n, n - k))
                  return std::make_pair("type B broke at n=" + std::to_string(n), false);
            return std::make_pair(std::string("symmetric"), true);
          });

  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json out;
  out["overall"] = report.overall() ? "pass" : "fail";
  nlohmann::json entries = nlohmann::json::array();
  for (const VerifyEntry& e : report.entries) {
    nlohmann::json entry;
    entry["suite"] = e.suite;
    entry["name"] = e.name;
    entry["target"] = e.target;
    entry["computed"] = e.computed;
    entry["pass"] = e.pass;
    entry["ms"] = e.ms;
    entries.push_back(std::move(entry));
  }
  out["entries"] = std::move(entries);
  return out.dump(2);
}

}  // namespace cyclotile
