// Acceptance runner. Each criterion prints its individual checks followed by
// a single "CRITERION n: PASS" or "CRITERION n: FAIL" line; the exit status
// is nonzero when any selected criterion fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "checks.hpp"
#include "generators.hpp"
#include "json.hpp"
#include "matexp/canonical.hpp"
#include "matexp/cli.hpp"
#include "matexp/matfun2.hpp"
#include "matexp/matfun3.hpp"
#include "matexp/oracle.hpp"
#include "matexp/solver.hpp"

using namespace matexp;
using namespace matexp::testing;

namespace {

class Report {
 public:
  void check(const std::string& label, bool ok, const std::string& detail = "") {
    std::printf("  [%s] %s%s%s\n", ok ? "ok" : "FAIL", label.c_str(), detail.empty() ? "" : ": ",
                detail.c_str());
    pass_ = pass_ && ok;
  }
  void bound(const std::string& label, double value, double limit) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.3e (limit %.1e)", value, limit);
    check(label, value <= limit, buf);
  }
  bool passed() const { return pass_; }

 private:
  bool pass_ = true;
};

const Mat2 kRep2{{3, 2}, {-8, -5}};
const Mat2 kCpx2{{0, 1}, {-5, -2}};
const Mat2 kDst2{{5, -1}, {3, 1}};
const Mat3 kTri3{{2, -1, 2}, {5, -3, 3}, {-1, 0, -2}};
const Mat3 kDbl3{{1, -3, 4}, {4, -7, 8}, {6, -7, 7}};
const Mat3 kCpx3{{1, 1, -1}, {0, 3, 0}, {1, 0, 1}};

const std::vector<double> kFiveTimes = {-1.0, 0.0, 0.5, 1.0, 2.0};

// ---------------------------------------------------------------------------

bool criterion1() {
  Report r;
  {
    double worst = 0;
    for (double t : {0.0, 0.5, 1.0, 2.0}) {
      const double e = std::exp(-t);
      worst = std::max(worst, rel_err(solve_ivp(kRep2, Vec2{1, -1}, t), Vec2{e * (1 + 2 * t), -e * (1 + 4 * t)}));
    }
    r.bound("2x2 repeated IVP at t = 0, 0.5, 1, 2", worst, 1e-12);
  }
  {
    const auto sol = closed_form(kCpx2, Vec2{2, 1});
    bool shape = sol.modes.size() == 2;
    double worst = 0;
    for (const auto& m : sol.modes) {
      shape = shape && m.rho == -1.0 && m.omega == 2.0 && m.k == 0;
      const Vec2 want = m.kind == ModeKind::cos ? Vec2{2, 1} : Vec2{1.5, -5.5};
      worst = std::max(worst, rel_err(m.coeff, want));
    }
    r.check("2x2 complex modes are e^{-t}cos 2t and e^{-t}sin 2t", shape);
    r.bound("2x2 complex mode coefficients (2,1) and (3/2,-11/2)", worst, 1e-12);
  }
  {
    double worst = 0;
    for (double t : kFiveTimes) {
      const double e4 = std::exp(4 * t), e2 = std::exp(2 * t);
      worst = std::max(worst, rel_err(solve_ivp(kDst2, Vec2{1, 2}, t), Vec2{0.5 * (e4 + e2), 0.5 * (e4 + 3 * e2)}));
    }
    r.bound("2x2 distinct IVP at 5 t values", worst, 1e-12);
  }
  {
    const Decomp3 d = decompose(kTri3);
    r.check("3x3 triple N exact", d.aux == Mat3{{3, -1, 2}, {5, -2, 3}, {-1, 0, -1}});
    r.check("3x3 triple N^2 exact", d.aux_sq == Mat3{{2, -1, 1}, {2, -1, 1}, {-2, 1, -1}});
    double worst = 0;
    for (double t : kFiveTimes) {
      const double q = t * t;
      const Mat3 want = std::exp(-t) * Mat3{{1 + 3 * t + q, -t - q / 2, 2 * t + q / 2},
                                            {5 * t + q, 1 - 2 * t - q / 2, 3 * t + q / 2},
                                            {-t - q, q / 2, 1 - t - q / 2}};
      worst = std::max(worst, rel_err(expm(d, t), want));
    }
    r.bound("3x3 triple e^{tA} polynomial form at 5 t values", worst, 1e-12);
  }
  {
    const Decomp3 d = decompose(kDbl3);
    r.bound("3x3 double+simple P", max_abs(d.projection - Mat3{{1, -1, 1}, {2, -2, 2}, {2, -2, 2}}), 1e-12);
    r.bound("3x3 double+simple N", max_abs(d.aux - Mat3{{-2, 1, 0}, {-4, 2, 0}, {-2, 1, 0}}), 1e-12);
    const Vec3 x0{1, 0, 1};
    std::array<double, 3> worst{};
    for (double t : kFiveTimes) {
      const Vec3 x = solve_ivp(kDbl3, x0, t);
      const double em = std::exp(-t), e3 = std::exp(3 * t);
      const Vec3 reference{(-1 - 2 * t) * em + 2 * e3, (-4 - 4 * t) * em + 4 * e3, (-2 - 4 * t) * em + 4 * e3};
      for (std::size_t i = 0; i < 3; ++i)
        worst[i] = std::max(worst[i], std::abs(x[i] - reference[i]) / std::max(std::abs(reference[i]), 1e-300));
    }
    r.bound("3x3 double+simple solution component 1", worst[0], 1e-12);
    r.bound("3x3 double+simple solution component 2", worst[1], 1e-12);
    r.bound("3x3 double+simple solution component 3, (-2-4t)e^{-t}+4e^{3t}", worst[2], 1e-12);
  }
  {
    const Decomp3 d = decompose(kCpx3);
    r.bound("3x3 complex+real P", max_abs(d.projection - 0.2 * Mat3{{0, 2, 0}, {0, 5, 0}, {0, 1, 0}}), 1e-12);
    r.bound("3x3 complex+real J", max_abs(d.aux - 0.2 * Mat3{{0, 1, -5}, {0, 0, 0}, {5, -2, 0}}), 1e-12);
    double worst = 0;
    for (double t : kFiveTimes) {
      const double e3 = std::exp(3 * t), et = std::exp(t), c = std::cos(t), s = std::sin(t);
      const Vec3 want = 0.2 * Vec3{2 * e3 - et * (2 * c - s), 5 * e3, e3 - et * (c + 2 * s)};
      worst = std::max(worst, rel_err(solve_ivp(kCpx3, Vec3::basis(1), t), want));
    }
    r.bound("3x3 complex+real solution at 5 t values", worst, 1e-12);
  }
  return r.passed();
}

// ---------------------------------------------------------------------------

template <std::size_t N>
double oracle_worst(const Mat<N>& a, const std::vector<double>& times) {
  const auto d = decompose(a);
  double worst = 0;
  for (double t : times) worst = std::max(worst, rel_err(expm(d, t), oracle::expm_series(a, t)));
  return worst;
}

// Matrix similar to `c` whose classification margin lands in (tol, 10 tol].
template <std::size_t N>
bool in_band(const Mat<N>& a) {
  const double m = classification_margin(char_poly(a));
  return m > kDefaultTol && m <= 10 * kDefaultTol;
}

Mat2 near_boundary2(Rng& rng) {
  for (;;) {
    const double l = half_int(rng);
    const double scale = std::max({1.0, std::abs(2 * l), std::sqrt(std::abs(l * l))});
    const double gap = scale * std::sqrt(kDefaultTol * uniform(rng, 1.5, 9.0));
    Mat2 c;
    switch (uniform_int(rng, 0, 1)) {
      case 0: c = Mat2{{l, 1}, {0, l + gap}}; break;
      default: c = Mat2{{l, gap / 2}, {-gap / 2, l}}; break;
    }
    const Mat2 a = similar(rng, c);
    if (in_band(a)) return a;
  }
}

Mat3 near_boundary3(Rng& rng) {
  for (;;) {
    double l = half_int(rng), mu = half_int(rng);
    if (std::abs(l - mu) < 1.0) mu = l + 2.0;
    const double scale = root_scale(char_poly(Mat3::diagonal({l, l, mu})));
    const double gap = scale * std::sqrt(kDefaultTol * uniform(rng, 1.5, 9.0));
    Mat3 c;
    switch (uniform_int(rng, 0, 1)) {
      case 0: c = Mat3{{l, 1, 0}, {0, l + gap, 0}, {0, 0, mu}}; break;
      default: c = Mat3{{l, gap / 2, 0}, {-gap / 2, l, 0}, {0, 0, mu}}; break;
    }
    const Mat3 a = similar(rng, c);
    if (in_band(a)) return a;
  }
}

template <std::size_t N, class Gen>
void stress_band(Report& r, const char* label, Gen gen, Rng& rng, int count) {
  const std::vector<double> times = {-2.0, -0.5, 0.5, 2.0};
  int rejected = 0, other = 0;
  double worst = 0;
  for (int i = 0; i < count; ++i) {
    const Mat<N> a = gen(rng);
    try {
      worst = std::max(worst, oracle_worst(a, times));
    } catch (const DegenerateDecomposition&) {
      ++rejected;
    } catch (const Error&) {
      ++other;
    }
  }
  r.bound(std::string(label) + " near-boundary band, " + std::to_string(count) + " matrices (" +
              std::to_string(rejected) + " raised DegenerateDecomposition)",
          worst, 1e-6);
  r.check(std::string(label) + " near-boundary band raises no other error", other == 0, std::to_string(other));
}

bool criterion2() {
  Report r;
  Rng rng(20241);
  const std::vector<double> times = {-2.0, -0.5, 0.5, 2.0};
  double w2 = 0, w3 = 0;
  int fail2 = 0, fail3 = 0;
  for (int i = 0; i < 10000; ++i) {
    try {
      w2 = std::max(w2, oracle_worst(well_classified<2>(rng), times));
    } catch (const Error&) {
      ++fail2;
    }
    try {
      w3 = std::max(w3, oracle_worst(well_classified<3>(rng), times));
    } catch (const Error&) {
      ++fail3;
    }
  }
  r.bound("2x2 closed form vs series, 10000 matrices x 4 times", w2, 1e-9);
  r.check("2x2 no exceptions", fail2 == 0, std::to_string(fail2));
  r.bound("3x3 closed form vs series, 10000 matrices x 4 times", w3, 1e-9);
  r.check("3x3 no exceptions", fail3 == 0, std::to_string(fail3));
  stress_band<2>(r, "2x2", near_boundary2, rng, 1000);
  stress_band<3>(r, "3x3", near_boundary3, rng, 1000);
  return r.passed();
}

// ---------------------------------------------------------------------------

bool criterion3() {
  Report r;
  Rng rng(30311);
  const int n = 1000;
  const auto aux_limit = [](const Mat2& x) { return 1e-10 * std::max(1.0, max_abs(x) * max_abs(x)); };

  double nsq = 0, jneg = 0, jpos = 0;
  int cn = 0, cneg = 0, cpos = 0;
  while (cn < n || cneg < n || cpos < n) {
    for (const Mat2& a : {make_repeated(rng, true), make_complex_pair(rng), make_distinct_real(rng),
                          well_classified<2>(rng)}) {
      const Decomp2 d = decompose(a);
      const Mat2& x = d.aux;
      if (std::holds_alternative<Repeated>(d.spectrum)) {
        nsq = std::max(nsq, max_abs(x * x) / aux_limit(x));
        ++cn;
      } else if (std::holds_alternative<ComplexPair>(d.spectrum)) {
        jneg = std::max(jneg, max_abs(x * x + Mat2::identity()) / aux_limit(x));
        ++cneg;
      } else {
        jpos = std::max(jpos, max_abs(x * x - Mat2::identity()) / aux_limit(x));
        ++cpos;
      }
    }
  }
  const auto label = [](const char* what, int c) { return std::string(what) + " on " + std::to_string(c) + " matrices, defect / limit"; };
  r.bound(label("2x2 N^2 = O", cn), nsq, 1.0);
  r.bound(label("2x2 J^2 = -I", cneg), jneg, 1.0);
  r.bound(label("2x2 J^2 = I", cpos), jpos, 1.0);

  const Mat3 id = Mat3::identity();
  double n3 = 0, p2 = 0, pn = 0, np = 0, nn = 0, pj = 0, jp = 0, jneg3 = 0, jpos3 = 0;
  int ct = 0, cd = 0, cc = 0, c4 = 0;
  while (ct < n || cd < n || cc < n || c4 < n) {
    for (const Mat3& a : {make_triple(rng, 1 + (ct % 3)), make_double_simple(rng, cd % 2 == 0),
                          make_complex_real(rng), make_three_distinct(rng), well_classified<3>(rng)}) {
      const Decomp3 d = decompose(a);
      const double lim = identity_tolerance(a);
      const Mat3& p = d.projection;
      const Mat3& x = d.aux;
      if (std::holds_alternative<Triple>(d.spectrum)) {
        n3 = std::max(n3, max_abs(x * x * x) / lim);
        ++ct;
        continue;
      }
      p2 = std::max(p2, max_abs(p * p - p) / lim);
      if (std::holds_alternative<DoubleSimple>(d.spectrum)) {
        pn = std::max(pn, max_abs(p * x) / lim);
        np = std::max(np, max_abs(x * p) / lim);
        nn = std::max(nn, max_abs(x * x) / lim);
        ++cd;
      } else {
        pj = std::max(pj, max_abs(p * x) / lim);
        jp = std::max(jp, max_abs(x * p) / lim);
        if (std::holds_alternative<ComplexReal>(d.spectrum)) {
          jneg3 = std::max(jneg3, max_abs(x * x + (id - p)) / lim);
          ++cc;
        } else {
          jpos3 = std::max(jpos3, max_abs(x * x - (id - p)) / lim);
          ++c4;
        }
      }
    }
  }
  r.bound(label("3x3 N^3 = O", ct), n3, 1.0);
  r.bound(label("3x3 P^2 = P", cd + cc + c4), p2, 1.0);
  r.bound(label("3x3 PN = O", cd), pn, 1.0);
  r.bound(label("3x3 NP = O", cd), np, 1.0);
  r.bound(label("3x3 N^2 = O", cd), nn, 1.0);
  r.bound(label("3x3 PJ = O", cc + c4), pj, 1.0);
  r.bound(label("3x3 JP = O", cc + c4), jp, 1.0);
  r.bound(label("3x3 J^2 = -(I-P)", cc), jneg3, 1.0);
  r.bound(label("3x3 J^2 = I-P", c4), jpos3, 1.0);
  return r.passed();
}

// ---------------------------------------------------------------------------

std::vector<Mat2> samples2(Rng& rng, int per_kind) {
  std::vector<Mat2> out;
  for (int i = 0; i < per_kind; ++i)
    for (const Mat2& a : {make_repeated(rng, true), make_repeated(rng, false), make_complex_pair(rng),
                          make_distinct_real(rng), well_classified<2>(rng)})
      out.push_back(a);
  return out;
}

std::vector<Mat3> samples3(Rng& rng, int per_kind) {
  std::vector<Mat3> out;
  for (int i = 0; i < per_kind; ++i)
    for (const Mat3& a : {make_triple(rng, 1 + i % 3), make_double_simple(rng, i % 2 == 0), make_complex_real(rng),
                          make_three_distinct(rng), well_classified<3>(rng)})
      out.push_back(a);
  return out;
}

template <std::size_t N>
void functional(Report& r, const char* label, const std::vector<Mat<N>>& as, Rng& rng) {
  const double h = 1e-5;
  double semi = 0, dete = 0, deriv = 0;
  bool ident = true;
  int nderiv = 0;
  for (const Mat<N>& a : as) {
    const auto d = decompose(a);
    const double s = uniform(rng, -2, 2), t = uniform(rng, -2, 2);
    semi = std::max(semi, semigroup_err(expm(d, s + t), expm(d, s), expm(d, t)));
    const Mat<N> e = expm(d, t);
    const double want = std::exp(t * trace(a));
    dete = std::max(dete, std::abs(det(e) - want) /
                              std::max(want, 1e-3 * std::pow(max_abs(e), static_cast<double>(N))));
    ident = ident && expm(d, 0.0) == Mat<N>::identity();
    if (max_abs(a) <= 5.0) {
      const Mat<N> fd = (1.0 / (2 * h)) * (expm(d, t + h) - expm(d, t - h));
      deriv = std::max(deriv, rel_err(fd, Mat<N>(a * e)));
      ++nderiv;
    }
  }
  const std::string n = std::to_string(as.size());
  r.bound(std::string(label) + " semigroup on " + n + " matrices", semi, 1e-10);
  r.bound(std::string(label) + " det e^{tA} = e^{t trA} on " + n + " matrices", dete, 1e-10);
  r.check(std::string(label) + " e^{0A} = I exactly on " + n + " matrices", ident);
  r.bound(std::string(label) + " centred difference derivative on " + std::to_string(nderiv) + " matrices", deriv, 1e-8);
}

bool criterion4() {
  Report r;
  Rng rng(40427);
  const auto a2 = samples2(rng, 250);
  const auto a3 = samples3(rng, 250);
  functional<2>(r, "2x2", a2, rng);
  functional<3>(r, "3x3", a3, rng);
  double pyth = 0, hyp = 0, euler = 0;
  for (const Mat2& a : a2) {
    const Decomp2 d = decompose(a);
    const Mat2 c = cosm(d), s = sinm(d), ch = coshm(d), sh = sinhm(d);
    const double ts = std::max(max_abs(c), max_abs(s));
    pyth = std::max(pyth, max_abs(c * c + s * s - Mat2::identity()) / std::max(1.0, ts * ts));
    hyp = std::max(hyp, max_abs(ch * ch - sh * sh - Mat2::identity()) / std::max(1.0, max_abs(ch) * max_abs(ch)));
    const ComplexMat2 z = expim(d, 1);
    const double zs = std::max({1.0, max_abs(z.re), max_abs(z.im)});
    euler = std::max(euler, std::max(max_abs(z.re - c), max_abs(z.im - s)) / zs);
  }
  const std::string n = std::to_string(a2.size());
  r.bound("2x2 cos^2 + sin^2 = I on " + n + " matrices", pyth, 1e-10);
  r.bound("2x2 cosh^2 - sinh^2 = I on " + n + " matrices", hyp, 1e-10);
  r.bound("2x2 e^{iA} = cos A + i sin A on " + n + " matrices", euler, 1e-12);
  return r.passed();
}

// ---------------------------------------------------------------------------

template <std::size_t N>
void alternate(Report& r, const std::string& label, const Mat<N>& a, const Mat<N>& t, const Mat<N>& c) {
  CanonicalPair<N> p;
  p.t = t;
  p.c = c;
  p.t_inv = invert(t);
  r.bound(label, max_abs(a - t * c * p.t_inv) / p.residual_bound(a), 1.0);
}

template <std::size_t N>
double eigen_worst(const Mat<N>& a) {
  double worst = 0;
  for (const auto& e : eigen(decompose(a), a).entries)
    worst = std::max(worst, eigen_defect(a, e) / (1e-9 * std::max(1.0, max_abs(a))));
  return worst;
}

template <std::size_t N>
double reconstruct(const Mat<N>& a) {
  const auto p = canonical(decompose(a), a);
  return p.residual / p.residual_bound(a);
}

bool criterion5() {
  Report r;
  const std::pair<const char*, Mat2> ex2[] = {{"2x2 repeated", kRep2}, {"2x2 complex", kCpx2}, {"2x2 distinct", kDst2}};
  const std::pair<const char*, Mat3> ex3[] = {{"3x3 triple", kTri3}, {"3x3 double+simple", kDbl3}, {"3x3 complex+real", kCpx3}};
  for (const auto& [name, a] : ex2) {
    r.bound(std::string(name) + " example reconstruction / bound", reconstruct(a), 1.0);
    r.bound(std::string(name) + " example eigen defect / limit", eigen_worst(a), 1.0);
  }
  for (const auto& [name, a] : ex3) {
    r.bound(std::string(name) + " example reconstruction / bound", reconstruct(a), 1.0);
    r.bound(std::string(name) + " example eigen defect / limit", eigen_worst(a), 1.0);
  }

  alternate<2>(r, "2x2 repeated reference T=[[2,0],[-4,1]]", kRep2, Mat2{{2, 0}, {-4, 1}}, Mat2{{-1, 1}, {0, -1}});
  alternate<2>(r, "2x2 complex reference T=[[1,2],[-5,0]]", kCpx2, Mat2{{1, 2}, {-5, 0}}, Mat2{{-1, 2}, {-2, -1}});
  alternate<2>(r, "2x2 distinct reference T=[[-1,1],[-1,3]]", kDst2, Mat2{{-1, 1}, {-1, 3}}, Mat2::diagonal({4, 2}));
  {
    // Complex diagonalisation T = [[2+i, 2-i], [-5i, 5i]], D = diag(-1+2i, -1-2i):
    // check A T = T D column by column.
    using C = std::complex<double>;
    const C t[2][2] = {{C(2, 1), C(2, -1)}, {C(0, -5), C(0, 5)}};
    const C lam[2] = {C(-1, 2), C(-1, -2)};
    double worst = 0;
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2; ++i) {
        const C at = kCpx2(i, 0) * t[0][j] + kCpx2(i, 1) * t[1][j];
        worst = std::max(worst, std::abs(at - t[i][j] * lam[j]));
      }
    const C dt = t[0][0] * t[1][1] - t[0][1] * t[1][0];
    const C inv[2][2] = {{t[1][1] / dt, -t[0][1] / dt}, {-t[1][0] / dt, t[0][0] / dt}};
    double nt = 0, ninv = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        nt = std::max(nt, std::abs(t[i][j]));
        ninv = std::max(ninv, std::abs(inv[i][j]));
      }
    const double bound = 1e-9 * std::max(1.0, max_abs(kCpx2)) * nt * ninv;
    r.bound("2x2 complex reference complex T=[[2+i,2-i],[-5i,5i]], |AT - TD| / bound", worst / bound, 1.0);
  }
  alternate<3>(r, "3x3 triple reference T=[[1,2,0],[1,3,0],[-1,-1,1]]", kTri3, Mat3{{1, 2, 0}, {1, 3, 0}, {-1, -1, 1}},
               Mat3{{-1, 1, 0}, {0, -1, 1}, {0, 0, -1}});
  alternate<3>(r, "3x3 double+simple reference T=[[8,-1,1],[16,2,2],[8,3,2]]", kDbl3,
               Mat3{{8, -1, 1}, {16, 2, 2}, {8, 3, 2}}, Mat3{{-1, 1, 0}, {0, -1, 0}, {0, 0, 3}});
  alternate<3>(r, "3x3 complex+real reference T=[[-1,0,2],[0,0,5],[0,1,1]]", kCpx3, Mat3{{-1, 0, 2}, {0, 0, 5}, {0, 1, 1}},
               Mat3{{1, 1, 0}, {-1, 1, 0}, {0, 0, 3}});

  Rng rng(50513);
  const auto sweep = [&](const std::string& name, auto gen) {
    double rec = 0, eig = 0;
    int errors = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto a = gen();
      try {
        rec = std::max(rec, reconstruct(a));
        eig = std::max(eig, eigen_worst(a));
      } catch (const Error&) {
        ++errors;
      }
    }
    r.bound(name + " 1000 random reconstructions / bound", rec, 1.0);
    r.bound(name + " 1000 random eigen defects / limit", eig, 1.0);
    r.check(name + " no exceptions", errors == 0, std::to_string(errors));
  };
  sweep("2x2 repeated defective", [&] { return make_repeated(rng, true); });
  sweep("2x2 repeated scalar", [&] { return make_repeated(rng, false); });
  sweep("2x2 complex pair", [&] { return make_complex_pair(rng); });
  sweep("2x2 distinct real", [&] { return make_distinct_real(rng); });
  sweep("3x3 triple, N^2 != O", [&] { return make_triple(rng, 3); });
  sweep("3x3 triple, N^2 = O", [&] { return make_triple(rng, 2); });
  sweep("3x3 triple, N = O", [&] { return make_triple(rng, 1); });
  sweep("3x3 double+simple defective", [&] { return make_double_simple(rng, true); });
  sweep("3x3 double+simple diagonalisable", [&] { return make_double_simple(rng, false); });
  sweep("3x3 complex+real", [&] { return make_complex_real(rng); });
  sweep("3x3 three distinct", [&] { return make_three_distinct(rng); });
  return r.passed();
}

// ---------------------------------------------------------------------------

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool criterion6() {
  Report r;
  using nlohmann::json;
  {
    const auto text = run_cli({"exp", "--matrix", "3,2;-8,-5", "--t", "1"});
    const auto js = run_cli({"exp", "--matrix", "3,2;-8,-5", "--t", "1", "--json"});
    const double e = std::exp(-1.0);
    const double want[2][2] = {{5 * e, 2 * e}, {-8 * e, -3 * e}};
    double worst = 0;
    bool printed = text.code == 0;
    if (js.code == 0) {
      const auto doc = json::parse(js.out);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          worst = std::max(worst, std::abs(doc["result"][i][j].get<double>() - want[i][j]) / (8 * e));
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.12g", want[i][j]);
          printed = printed && text.out.find(buf) != std::string::npos;
        }
    }
    r.check("exp 3,2;-8,-5 at t=1 exits 0 and prints e^{-1}[[5,2],[-8,-3]] to 12 digits", printed && js.code == 0);
    r.bound("exp 3,2;-8,-5 at t=1 JSON result error", js.code == 0 ? worst : 1.0, 1e-15);
  }
  {
    const auto res = run_cli({"exp", "--matrix", "1,0;0,1", "--t", "0", "--json"});
    const bool ok = res.code == 0 && json::parse(res.out)["result"] == json::parse("[[1.0,0.0],[0.0,1.0]]");
    r.check("exp 1,0;0,1 at t=0 gives the identity, exit 0", ok);
  }
  {
    const auto res = run_cli({"verify", "--matrix", "1,-3,4;4,-7,8;6,-7,7", "--t", "0.5", "--tol", "1e-9"});
    r.check("verify 1,-3,4;4,-7,8;6,-7,7 at t=0.5 prints PASS, exit 0",
            res.code == 0 && res.out.find("PASS") != std::string::npos, "exit " + std::to_string(res.code));
  }
  {
    const auto res = run_cli({"fn", "--which", "cos", "--matrix", "1,0,0;0,1,0;0,0,1"});
    r.check("malformed input exits 2 with empty stdout", res.code == 2 && res.out.empty() && !res.err.empty());
  }
  {
    const std::vector<std::vector<std::string>> cases = {
        {"exp", "--matrix", "0.1,-2.7;3.3,1e-3", "--t", "-1.25", "--json"},
        {"exp", "--matrix", "1,-3,4;4,-7,8;6,-7,7", "--t", "0.3", "--json"},
        {"exp", "--matrix", "1.5,0.25,-3;2,-1,0.75;0.3,0.6,0.9", "--t", "1.7", "--json"},
        {"canonical", "--matrix", "1,1,-1;0,3,0;1,0,1", "--json"},
        {"fn", "--which", "sinh", "--matrix", "0.2,1.9;-0.7,3.1", "--json"},
    };
    bool all = true;
    const auto path = std::filesystem::temp_directory_path() / "matexp_acceptance_roundtrip.json";
    for (const auto& args : cases) {
      const auto first = run_cli(args);
      std::ofstream(path) << first.out;
      std::vector<std::string> again = {args[0], "--matrix", path.string(), "--json"};
      if (args[0] == "fn") again.insert(again.end(), {"--which", args[2]});
      const auto second = run_cli(again);
      all = all && first.code == 0 && second.code == 0 && first.out == second.out;
    }
    std::filesystem::remove(path);
    r.check("JSON output re-run from its own document is byte-identical on " + std::to_string(cases.size()) + " inputs", all);
  }
  return r.passed();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matexp acceptance runner"};
  std::vector<int> which;
  app.add_option("--criterion", which, "criterion number(s) 1-6; all when omitted")->check(CLI::Range(1, 6));
  CLI11_PARSE(app, argc, argv);
  if (which.empty()) which = {1, 2, 3, 4, 5, 6};

  const std::function<bool()> table[] = {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6};
  bool all = true;
  for (int n : which) {
    std::printf("criterion %d checks:\n", n);
    bool pass = false;
    try {
      pass = table[n - 1]();
    } catch (const std::exception& e) {
      std::printf("  [FAIL] unexpected exception: %s\n", e.what());
    }
    std::printf("CRITERION %d: %s\n", n, pass ? "PASS" : "FAIL");
    std::fflush(stdout);
    all = all && pass;
  }
  return all ? 0 : 1;
}
