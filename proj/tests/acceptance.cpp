// Acceptance gate: one line per criterion, exit status = number of
// failures.  Each criterion prints [PASS]/[FAIL] with its wall time.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "swk/additivity.hpp"
#include "swk/checkers.hpp"
#include "swk/concrete.hpp"
#include "swk/f1plus.hpp"
#include "swk/flag.hpp"
#include "swk/functors.hpp"
#include "swk/k0.hpp"
#include "swk/poly.hpp"
#include "swk/session.hpp"
#include "swk/snf.hpp"

using namespace swk;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body,
               double budget_seconds = 0) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over budget ") +
                  std::to_string(budget_seconds) + "s";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                number, title.c_str(), secs, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool run_clean(const std::string& script, const std::string& command,
               int bound, int degree, std::string& detail) {
    SessionOptions o;
    o.config = parse_dsl(script);
    o.bound = bound;
    o.degree = degree;
    Session s(o);
    CommandResult r = s.run(command);
    if (r.status != kStatusOk) {
        detail += s.instance_name() + ": " + r.output.substr(0, 200) + "; ";
        return false;
    }
    return true;
}

std::vector<Int> single(long long n) { return {Int(n)}; }

Poly random_poly(int prime, int nvars, std::mt19937& rng) {
    Poly f = Poly::zero(prime, nvars);
    std::uniform_int_distribution<int> coeff(0, prime - 1);
    std::vector<std::vector<int>> exps;
    std::vector<int> e(nvars, 0);
    // all monomials of total degree <= 2
    std::function<void(int, int)> walk = [&](int i, int left) {
        if (i == nvars) {
            exps.push_back(e);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            e[i] = d;
            walk(i + 1, left - d);
        }
        e[i] = 0;
    };
    walk(0, 2);
    for (const auto& m : exps) f.add_term(m, coeff(rng));
    return f;
}

Mask random_mask_of_size(int size, int universe, std::mt19937& rng) {
    std::vector<int> atoms(universe);
    for (int i = 0; i < universe; ++i) atoms[i] = i;
    std::shuffle(atoms.begin(), atoms.end(), rng);
    Mask m = 0;
    for (int i = 0; i < size; ++i) m |= Mask(1) << atoms[i];
    return m;
}

}  // namespace

int main() {
    criterion(
        1, "axiom suites: finset(3), C2-sets(4), F_2/F_3 windows",
        [](std::string& detail) {
            bool ok = true;
            ok &= run_clean("universe 3;", "axioms", 3, 2, detail);
            ok &= run_clean("group { table: 0, 1; 1, 0; } universe 4;",
                            "axioms", 4, 2, detail);
            ok &= run_clean("field 2; var x;", "axioms", 2, 2, detail);
            ok &= run_clean("field 2; var x, y;", "axioms", 4, 2, detail);
            ok &= run_clean("field 3; var x;", "axioms", 3, 2, detail);
            ok &= run_clean("field 3; var x, y;", "axioms", 2, 2, detail);
            return ok;
        },
        60);

    criterion(2, "simplicial identities, exhaustive to degree 4 on finset(3)",
              [](std::string& detail) {
                  return run_clean("universe 3;", "flags", 3, 4, detail);
              });

    criterion(3, "K_0 by certified SNF: finset(5), C2-sets(4), F_3 window",
              [](std::string& detail) {
                  ConcreteSetInstance fs = ConcreteSetInstance::finset(5);
                  K0Group g = k0_group(fs, 5);
                  if (g.free_rank != 1 || !g.torsion.empty() ||
                      !snf_certified(g.pres.relations, g.snf)) {
                      detail = "finset(5): wrong group shape";
                      return false;
                  }
                  for (int n = 0; n <= 5; ++n) {
                      ObjId x = fs.require_object((Mask(1) << n) - 1);
                      if (g.class_of_object(fs, x) != single(n)) {
                          detail = "finset(5): [size " + std::to_string(n) +
                                   "] != " + std::to_string(n);
                          return false;
                      }
                  }
                  ConcreteSetInstance gs = ConcreteSetInstance::gset(
                      intern_group(GroupTable::cyclic(2)), 4);
                  K0Group gg = k0_group(gs, 4);
                  if (gg.free_rank != 2 || !gg.torsion.empty() ||
                      !snf_certified(gg.pres.relations, gg.snf)) {
                      detail = "C2-sets(4): rank " +
                               std::to_string(gg.free_rank) + " != 2";
                      return false;
                  }
                  ConcreteSetInstance w =
                      ConcreteSetInstance::varieties_window(3, 2);
                  K0Group gw = k0_group(w, 4);
                  if (gw.free_rank != 1 || !gw.torsion.empty() ||
                      !snf_certified(gw.pres.relations, gw.snf)) {
                      detail = "F_3 window: wrong group shape";
                      return false;
                  }
                  Poly conic =
                      parse_poly("x^2+y^2-1", 3, std::vector<std::string>{
                                                     "x", "y"});
                  ConstructibleSet c = ConstructibleSet::make(
                      PolySystem{3, 2, {conic}, {}});
                  ObjId wc = window_object(c, w);
                  if (wc == kNoObj ||
                      gw.class_of_object(w, wc) != single(c.point_count())) {
                      detail = "F_3 window: [conic] != point count";
                      return false;
                  }
                  return true;
              });

    criterion(4, "random closed immersions over F_3/F_5: |X|=|Z|+|X-Z|",
              [](std::string& detail) {
                  std::mt19937 rng(20260823u);
                  long long checked = 0;
                  for (int prime : {3, 5}) {
                      for (int trial = 0; trial < 60; ++trial) {
                          PolySystem amb{prime, 2, {}, {}};
                          if (trial % 2)
                              amb.equations.push_back(
                                  random_poly(prime, 2, rng));
                          ConstructibleSet x = ConstructibleSet::make(amb);
                          auto [z, imm] = closed_subset(
                              x, {random_poly(prime, 2, rng)});
                          VarTriple tr = subtraction_sequence_of(imm);
                          ++checked;
                          if (tr.z.point_count() +
                                  tr.complement.point_count() !=
                              x.point_count()) {
                              detail = "F_" + std::to_string(prime) +
                                       ": counts do not add up";
                              return false;
                          }
                      }
                  }
                  if (checked < 100) {
                      detail = "only " + std::to_string(checked) + " trials";
                      return false;
                  }
                  return true;
              });

    criterion(5, "W-exactness of point counting; op-W-exactness of the unit",
              [](std::string& detail) {
                  for (int prime : {2, 3})
                      for (int nvars : {1, 2}) {
                          ConcreteSetInstance w =
                              ConcreteSetInstance::varieties_window(prime,
                                                                    nvars);
                          int bound =
                              w.universe_size() <= 4 ? w.universe_size() : 2;
                          auto f = point_count_functor(w);
                          CheckReport r = check_w_exact(*f, bound);
                          if (!r.ok()) {
                              detail = "point count over F_" +
                                       std::to_string(prime) + ", " +
                                       std::to_string(nvars) + " vars: " +
                                       r.summary();
                              return false;
                          }
                      }
                  ConcreteSetInstance fs = ConcreteSetInstance::finset(6);
                  auto g = unit_functor(fs, 6);
                  CheckReport r = check_op_w_exact(*g, 6);
                  if (!r.ok()) {
                      detail = "unit functor: " + r.summary();
                      return false;
                  }
                  return true;
              });

    criterion(6, "sphere-splitting composite is the strict identity to size 6",
              [](std::string& detail) {
                  ConcreteSetInstance fs = ConcreteSetInstance::finset(6);
                  SplittingReport s = check_splitting(fs, 6);
                  if (!s.report.ok() || !s.strict) {
                      detail = s.report.summary();
                      return false;
                  }
                  return true;
              });

    criterion(
        7, "homotopy identity table: exhaustive bidegrees <= 2 plus 500 random",
        [](std::string& detail) {
            long long elements = 0, identities = 0, iso = 0;
            {
                ConcreteSetInstance base = ConcreteSetInstance::finset(4);
                F1PlusInstance fp(base);
                std::vector<AddElement> corpus;
                for (int m = 0; m <= 2; ++m)
                    for (int n = 0; n <= 2; ++n) {
                        auto part = enumerate_add_elements(fp, m, n, 2);
                        corpus.insert(corpus.end(), part.begin(), part.end());
                    }
                HomotopyReport r = verify_homotopy(fp, corpus);
                if (!r.report.ok()) {
                    detail = r.report.summary();
                    return false;
                }
                elements += r.elements_checked;
                identities += r.identities_checked;
                iso += r.up_to_iso;
            }
            {
                ConcreteSetInstance base = ConcreteSetInstance::finset(6);
                F1PlusInstance fp(base);
                auto corpus =
                    random_add_elements(fp, 3, 500, 20260823u, 2, 2);
                HomotopyReport r = verify_homotopy(fp, corpus);
                if (!r.report.ok()) {
                    detail = r.report.summary();
                    return false;
                }
                elements += r.elements_checked;
                identities += r.identities_checked;
                iso += r.up_to_iso;
            }
            std::ostringstream os;
            os << elements << " elements, " << identities
               << " identities, all strict";
            detail = os.str();
            return iso == 0;
        },
        300);

    criterion(8, "additivity on K_0 for finset(3) and C2-sets(3)",
              [](std::string& detail) {
                  ConcreteSetInstance fs = ConcreteSetInstance::finset(3);
                  F1PlusInstance fp(fs);
                  AdditivityK0Report a = additivity_on_k0(fp, 3);
                  if (!a.ok()) {
                      detail = "finset(3): " + a.detail;
                      return false;
                  }
                  ConcreteSetInstance gs = ConcreteSetInstance::gset(
                      intern_group(GroupTable::cyclic(2)), 3);
                  F1PlusInstance gp(gs);
                  AdditivityK0Report b = additivity_on_k0(gp, 3);
                  if (!b.ok()) {
                      detail = "C2-sets(3): " + b.detail;
                      return false;
                  }
                  return true;
              });

    criterion(9, "golden h_3 grids of the worked 5-simplex example",
              [](std::string& detail) {
                  ConcreteSetInstance base = ConcreteSetInstance::finset(6);
                  F1PlusInstance fp(base);
                  std::string got = appendix_h3_json(fp);
                  std::ifstream in(std::string(SWK_FIXTURE_DIR) +
                                   "/appendix_h3.json");
                  std::ostringstream want;
                  want << in.rdbuf();
                  if (!in.good() && want.str().empty()) {
                      detail = "fixture missing";
                      return false;
                  }
                  if (got != want.str()) {
                      detail = "rendered grids differ from the fixture";
                      return false;
                  }
                  return true;
              });

    criterion(10, "K_0 ring: 50 random products over F_3; biexactness",
              [](std::string& detail) {
                  ConcreteSetInstance w =
                      ConcreteSetInstance::varieties_window(3, 2);
                  K0Group g = k0_group(w, (size_t)w.universe_size());
                  if (g.free_rank != 1 || !g.torsion.empty()) {
                      detail = "window K_0 is not Z";
                      return false;
                  }
                  std::mt19937 rng(20260823u);
                  std::uniform_int_distribution<int> size(0, 3);
                  for (int trial = 0; trial < 50; ++trial) {
                      int sx = size(rng), sy = size(rng);
                      ObjId x = w.require_object(
                          random_mask_of_size(sx, 9, rng));
                      ObjId y = w.require_object(
                          random_mask_of_size(sy, 9, rng));
                      auto prod = k0_ring_product(
                          w, g, x, y, (size_t)w.universe_size());
                      if (!prod || *prod != single((long long)sx * sy)) {
                          detail = "[X][Y] != |X||Y| for sizes " +
                                   std::to_string(sx) + ", " +
                                   std::to_string(sy);
                          return false;
                      }
                  }
                  // biexactness at the polynomial level over F_3, one var:
                  // every pushout-product of linear closed immersions is a
                  // certified closed immersion, and X x empty = empty.
                  ConstructibleSet line = ConstructibleSet::affine_space(3, 1);
                  std::vector<VarMorphism> immersions;
                  for (int a = 0; a < 3; ++a)
                      for (int b = 0; b < 3; ++b) {
                          Poly f = Poly::zero(3, 1);
                          f.add_term({1}, a);
                          f.add_term({0}, b);
                          immersions.push_back(
                              closed_subset(line, {f}).second);
                      }
                  for (const auto& i : immersions)
                      for (const auto& j : immersions) {
                          VarMorphism m = pushout_product_mediator(i, j);
                          if (m.kind != VarKind::Closed) {
                              detail = "pushout-product not a closed "
                                       "immersion";
                              return false;
                          }
                          m.verify();
                      }
                  ConstructibleSet empty = ConstructibleSet::make(
                      PolySystem{3, 1, {Poly::constant(3, 1, 1)}, {}});
                  for (const auto& i : immersions) {
                      if (product(i.source, empty).point_count() != 0 ||
                          product(empty, i.target).point_count() != 0) {
                          detail = "X x empty has points";
                          return false;
                      }
                  }
                  return true;
              });

    std::printf("%s: %d of 10 criteria passed\n",
                failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                10 - failures);
    return failures;
}
