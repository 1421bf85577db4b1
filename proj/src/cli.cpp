#include "matexp/cli.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <utility>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "matexp/canonical.hpp"
#include "matexp/matfun2.hpp"
#include "matexp/matfun3.hpp"
#include "matexp/oracle.hpp"
#include "matexp/overloaded.hpp"
#include "matexp/solver.hpp"

namespace matexp::cli {
namespace {

using json = nlohmann::json;
using AnyMat = std::variant<Mat2, Mat3>;

struct Grid {
  double start;
  double stop;
  double step;
};

struct InputDoc {
  std::optional<AnyMat> matrix;
  std::optional<std::vector<double>> x0;
  std::optional<double> t;
  std::optional<Grid> grid;
  std::optional<double> tol;
};

// Raw flag values; an empty string means "not given".
struct Flags {
  std::string matrix;
  std::string t;
  std::string tol;
  std::string x0;
  std::string grid;
  std::string which;
  bool json = false;
  bool closed_form = false;
};

struct Resolved {
  AnyMat a;
  double tol = kDefaultTol;
  std::optional<double> t;
  std::optional<std::vector<double>> x0;
  std::optional<Grid> grid;
};

// ---------------------------------------------------------------- parsing

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_real(std::string_view text, std::string_view what) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size())
    throw InputError(fmt::format("{} is not a number: '{}'", what, text));
  if (!std::isfinite(v)) throw InputError(fmt::format("{} must be finite: '{}'", what, text));
  return v;
}

std::vector<double> parse_list(std::string_view text, std::string_view what) {
  std::vector<double> values;
  for (auto part : split(text, ',')) values.push_back(parse_real(part, what));
  return values;
}

AnyMat make_matrix(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  if (n != 2 && n != 3) throw InputError("matrix must be 2x2 or 3x3");
  for (const auto& r : rows)
    if (r.size() != n) throw InputError("matrix must be square");
  if (n == 2) return Mat2({rows[0][0], rows[0][1], rows[1][0], rows[1][1]});
  std::array<double, 9> m{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i * 3 + j] = rows[i][j];
  return Mat3(m);
}

double json_number(const json& v, std::string_view what) {
  if (!v.is_number()) throw InputError(fmt::format("{} must be a number", what));
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(fmt::format("{} must be finite", what));
  return x;
}

std::vector<double> json_numbers(const json& v, std::string_view what) {
  if (!v.is_array()) throw InputError(fmt::format("{} must be an array", what));
  std::vector<double> out;
  for (const auto& x : v) out.push_back(json_number(x, what));
  return out;
}

InputDoc parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("invalid JSON input: {}", e.what()));
  }
  if (!doc.is_object()) throw InputError("JSON input must be an object");
  InputDoc in;
  if (doc.contains("matrix")) {
    const json& m = doc["matrix"];
    if (!m.is_array()) throw InputError("\"matrix\" must be an array of rows");
    std::vector<std::vector<double>> rows;
    for (const auto& row : m) rows.push_back(json_numbers(row, "matrix entry"));
    in.matrix = make_matrix(rows);
  }
  if (doc.contains("x0")) in.x0 = json_numbers(doc["x0"], "x0 entry");
  if (doc.contains("t")) in.t = json_number(doc["t"], "t");
  if (doc.contains("tol")) in.tol = json_number(doc["tol"], "tol");
  if (doc.contains("t_grid")) {
    const json& g = doc["t_grid"];
    if (!g.is_object() || !g.contains("start") || !g.contains("stop") || !g.contains("step"))
      throw InputError("\"t_grid\" must be an object with start, stop and step");
    in.grid = Grid{json_number(g["start"], "t_grid.start"), json_number(g["stop"], "t_grid.stop"),
                   json_number(g["step"], "t_grid.step")};
  }
  return in;
}

InputDoc load_source(const std::string& src) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(src, ec)) {
    std::ifstream f(src);
    if (!f) throw InputError(fmt::format("cannot open '{}'", src));
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_document(ss.str());
  }
  if (src.find(';') == std::string::npos && src.find(',') == std::string::npos)
    throw InputError(fmt::format("'{}' is neither a readable file nor a matrix literal", src));
  std::vector<std::vector<double>> rows;
  for (auto row : split(src, ';')) rows.push_back(parse_list(row, "matrix entry"));
  InputDoc in;
  in.matrix = make_matrix(rows);
  return in;
}

Grid parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw InputError("--grid expects START:STOP:STEP");
  return {parse_real(parts[0], "grid start"), parse_real(parts[1], "grid stop"),
          parse_real(parts[2], "grid step")};
}

Resolved resolve(const Flags& f) {
  InputDoc doc = load_source(f.matrix);
  if (!doc.matrix) throw InputError("input has no matrix");
  Resolved r;
  r.a = *doc.matrix;
  r.tol = !f.tol.empty() ? parse_real(f.tol, "--tol") : doc.tol.value_or(kDefaultTol);
  if (!(r.tol > 0.0) || r.tol >= 1.0) throw InputError("tol must lie in (0, 1)");
  if (!f.t.empty())
    r.t = parse_real(f.t, "--t");
  else
    r.t = doc.t;
  if (!f.x0.empty())
    r.x0 = parse_list(f.x0, "x0 entry");
  else
    r.x0 = doc.x0;
  if (!f.grid.empty())
    r.grid = parse_grid(f.grid);
  else if (f.t.empty())
    r.grid = doc.grid;
  return r;
}

// ---------------------------------------------------------------- formatting

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // print -0 as 0
  return fmt::format("{:.12g}", v);
}

// Small rationals p/q (q <= 64) within 1e-12 are shown exactly.
std::string snap(double v) {
  for (int q = 1; q <= 64; ++q) {
    const double p = std::round(v * q);
    if (std::abs(v - p / q) <= 1e-12) {
      const double pz = p == 0.0 ? 0.0 : p;
      return q == 1 ? fmt::format("{:.0f}", pz) : fmt::format("{:.0f}/{}", pz, q);
    }
  }
  return num(v);
}

template <std::size_t N>
void print_matrix(std::ostream& os, const Mat<N>& m, bool rational = false) {
  for (std::size_t i = 0; i < N; ++i) {
    std::string line;
    for (std::size_t j = 0; j < N; ++j)
      line += fmt::format("{:>20}", rational ? snap(m(i, j)) : num(m(i, j)));
    os << line << '\n';
  }
}

template <std::size_t N>
std::string vec_text(const Vec<N>& v, bool rational = false) {
  std::string s = "(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ", ";
    s += rational ? snap(v[i]) : num(v[i]);
  }
  return s + ")";
}

template <std::size_t N>
json json_mat(const Mat<N>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < N; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < N; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

template <std::size_t N>
json json_vec(const Vec<N>& v) {
  json a = json::array();
  for (std::size_t i = 0; i < N; ++i) a.push_back(v[i]);
  return a;
}

json echo(const Resolved& r) {
  json j;
  std::visit([&](const auto& a) { j["matrix"] = json_mat(a); }, r.a);
  j["tol"] = r.tol;
  if (r.t) j["t"] = *r.t;
  if (r.x0) j["x0"] = *r.x0;
  if (r.grid) j["t_grid"] = {{"start", r.grid->start}, {"stop", r.grid->stop}, {"step", r.grid->step}};
  return j;
}

json residual_json(const Decomp2& d) {
  const char* name = std::holds_alternative<Repeated>(d.spectrum)      ? "N^2 = O"
                     : std::holds_alternative<ComplexPair>(d.spectrum) ? "J^2 = -I"
                                                                       : "J^2 = I";
  return {{name, d.residual}};
}

json residual_json(const Decomp3& d) {
  json j = json::object();
  for (const auto& r : d.residuals) j[r.identity] = r.value;
  return j;
}

template <std::size_t N>
struct Description {
  std::string formula;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::pair<std::string, Mat<N>>> pieces;
};

Description<2> describe(const Decomp2& d) {
  return std::visit(
      Overloaded{[&](const Repeated& s) {
                   return Description<2>{"e^{tA} = e^{l0 t} (I + t N)", {{"l0", s.lambda0}}, {{"N", d.aux}}};
                 },
                 [&](const ComplexPair& s) {
                   return Description<2>{"e^{tA} = e^{alpha t} (cos(omega t) I + sin(omega t) J)",
                                         {{"alpha", s.alpha}, {"omega", s.omega}},
                                         {{"J", d.aux}}};
                 },
                 [&](const DistinctReal& s) {
                   return Description<2>{
                       "e^{tA} = e^{alpha t} (cosh(beta t) I + sinh(beta t) J)",
                       {{"l1", s.lambda1}, {"l2", s.lambda2}, {"alpha", s.alpha}, {"beta", s.beta}},
                       {{"J", d.aux}}};
                 }},
      d.spectrum);
}

Description<3> describe(const Decomp3& d) {
  const Mat3& p = d.projection;
  const Mat3& x = d.aux;
  return std::visit(
      Overloaded{[&](const Triple& s) {
                   return Description<3>{"e^{tA} = e^{l0 t} (I + t N + t^2/2 N^2)",
                                         {{"l0", s.lambda0}},
                                         {{"N", x}, {"N^2", d.aux_sq}}};
                 },
                 [&](const DoubleSimple& s) {
                   return Description<3>{"e^{tA} = e^{l0 t} (I - P + t N) + e^{l3 t} P",
                                         {{"l0", s.lambda0}, {"l3", s.lambda3}},
                                         {{"P", p}, {"N", x}}};
                 },
                 [&](const ComplexReal& s) {
                   return Description<3>{
                       "e^{tA} = e^{alpha t} (cos(omega t) (I - P) + sin(omega t) J) + e^{l3 t} P",
                       {{"alpha", s.alpha}, {"omega", s.omega}, {"l3", s.lambda3}},
                       {{"P", p}, {"J", x}}};
                 },
                 [&](const ThreeDistinct& s) {
                   return Description<3>{
                       "e^{tA} = e^{alpha t} (cosh(beta t) (I - P) + sinh(beta t) J) + e^{l3 t} P",
                       {{"l1", s.lambda1},
                        {"l2", s.lambda2},
                        {"l3", s.lambda3},
                        {"alpha", s.alpha},
                        {"beta", s.beta}},
                       {{"P", p}, {"J", x}}};
                 }},
      d.spectrum);
}

template <std::size_t N>
void print_description(std::ostream& os, const Description<N>& desc) {
  os << desc.formula << '\n';
  for (const auto& [name, v] : desc.params) os << "  " << name << " = " << snap(v) << '\n';
  for (const auto& [name, m] : desc.pieces) {
    os << name << " =\n";
    print_matrix(os, m, true);
  }
}

template <std::size_t N>
json description_json(const Description<N>& desc) {
  json params = json::object();
  for (const auto& [name, v] : desc.params) params[name] = v;
  json pieces = json::object();
  for (const auto& [name, m] : desc.pieces) pieces[name] = json_mat(m);
  return {{"formula", desc.formula}, {"params", params}, {"pieces", pieces}};
}

const char* kind_name(ModeKind k) {
  switch (k) {
    case ModeKind::cos:
      return "cos";
    case ModeKind::sin:
      return "sin";
    default:
      return "plain";
  }
}

template <std::size_t N>
std::string mode_text(const Mode<N>& m) {
  std::string term;
  if (m.k == 1) term += "t ";
  if (m.k == 2) term += "t^2 ";
  term += fmt::format("e^({} t)", snap(m.rho));
  if (m.kind != ModeKind::plain) term += fmt::format(" {}({} t)", kind_name(m.kind), snap(m.omega));
  return fmt::format("{} * {}", vec_text(m.coeff, true), term);
}

template <std::size_t N>
json modes_json(const ClosedFormSolution<N>& sol) {
  json modes = json::array();
  for (const auto& m : sol.modes)
    modes.push_back({{"rho", m.rho},
                     {"k", m.k},
                     {"omega", m.omega},
                     {"kind", kind_name(m.kind)},
                     {"coeff", json_vec(m.coeff)}});
  return modes;
}

double relative_error(const auto& value, const auto& reference) {
  const double diff = max_abs(value - reference);
  const double size = max_abs(reference);
  return size > 0.0 ? diff / size : diff;
}

template <std::size_t N>
Vec<N> to_vec(const std::vector<double>& v) {
  if (v.size() != N) throw InputError(fmt::format("x0 must have {} entries", N));
  std::array<double, N> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return Vec<N>(a);
}

void emit(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- commands

int cmd_exp(const Flags& f, const Resolved& r, std::ostream& os) {
  if (!r.t) throw InputError("exp needs --t");
  const double t = *r.t;
  std::visit(
      [&](const auto& a) {
        const auto d = decompose(a, r.tol);
        const auto m = expm(d, t);
        const std::string name(case_name(d.spectrum));
        if (f.json) {
          json j = echo(r);
          j["case"] = name;
          j["result"] = json_mat(m);
          j["modes"] = json::array();
          j["residuals"] = residual_json(d);
          if (f.closed_form) j["closed_form"] = description_json(describe(d));
          emit(os, j);
          return;
        }
        os << "case: " << name << '\n';
        if (f.closed_form) print_description(os, describe(d));
        os << "e^{tA} at t = " << num(t) << ":\n";
        print_matrix(os, m);
      },
      r.a);
  return 0;
}

int cmd_fn(const Flags& f, const Resolved& r, std::ostream& os) {
  const auto* a = std::get_if<Mat2>(&r.a);
  if (a == nullptr) throw InputError("fn supports 2x2 matrices only");
  const Decomp2 d = decompose(*a, r.tol);
  const std::string name(case_name(d.spectrum));

  json result;
  std::string text;
  std::ostringstream body;
  if (f.which == "expi+" || f.which == "expi-") {
    const ComplexMat2 z = expim(d, f.which == "expi+" ? 1 : -1);
    result = {{"re", json_mat(z.re)}, {"im", json_mat(z.im)}};
    body << "re:\n";
    print_matrix(body, z.re);
    body << "im:\n";
    print_matrix(body, z.im);
  } else {
    const Mat2 m = f.which == "cos"    ? cosm(d)
                   : f.which == "sin"  ? sinm(d)
                   : f.which == "cosh" ? coshm(d)
                                       : sinhm(d);
    result = json_mat(m);
    print_matrix(body, m);
  }

  if (f.json) {
    json j = echo(r);
    j["which"] = f.which;
    j["case"] = name;
    j["result"] = result;
    j["modes"] = json::array();
    j["residuals"] = residual_json(d);
    emit(os, j);
  } else {
    os << "case: " << name << '\n' << f.which << "(A):\n" << body.str();
  }
  return 0;
}

int cmd_solve(const Flags& f, const Resolved& r, std::ostream& os) {
  if (!r.x0) throw InputError("solve needs --x0");
  if (r.t && r.grid) throw InputError("give either t or a time grid, not both");
  if (!r.t && !r.grid) throw InputError("solve needs --t or --grid");
  std::vector<double> grid;
  if (r.grid) grid = make_grid(r.grid->start, r.grid->stop, r.grid->step);

  std::visit(
      [&](const auto& a) {
        constexpr std::size_t N = std::decay_t<decltype(a)>::order;
        const Vec<N> x0 = to_vec<N>(*r.x0);
        const auto sol = closed_form(a, x0, r.tol);
        const auto d = decompose(a, r.tol);

        json result;
        std::ostringstream body;
        if (r.t) {
          const Vec<N> x = solve_ivp(a, x0, *r.t, r.tol);
          result = json_vec(x);
          body << "x(" << num(*r.t) << ") = " << vec_text(x) << '\n';
        } else {
          result = json::array();
          body << fmt::format("{:>20}", "t");
          for (std::size_t i = 0; i < N; ++i) body << fmt::format("{:>20}", fmt::format("x{}", i + 1));
          body << '\n';
          for (const auto& p : sample(sol, grid)) {
            result.push_back({{"t", p.t}, {"x", json_vec(p.x)}});
            body << fmt::format("{:>20}", num(p.t));
            for (std::size_t i = 0; i < N; ++i) body << fmt::format("{:>20}", num(p.x[i]));
            body << '\n';
          }
        }

        if (f.json) {
          json j = echo(r);
          j["case"] = sol.case_name;
          j["result"] = result;
          j["modes"] = modes_json(sol);
          j["residuals"] = residual_json(d);
          emit(os, j);
          return;
        }
        os << "case: " << sol.case_name << '\n';
        if (f.closed_form) {
          os << "x(t) =\n";
          for (const auto& m : sol.modes) os << "  + " << mode_text(m) << '\n';
        }
        os << body.str();
      },
      r.a);
  return 0;
}

template <std::size_t N>
json eigen_json(const EigenReport<N>& rep) {
  json out = json::array();
  for (const auto& e : rep.entries) {
    json b = json::array();
    for (const auto& v : e.basis) b.push_back(json_vec(v));
    json entry = {{"re", e.re}, {"im", e.im}, {"source", e.source}, {"basis", b}};
    if (e.im != 0.0) {
      entry["vec_re"] = json_vec(e.vec_re);
      entry["vec_im"] = json_vec(e.vec_im);
    }
    out.push_back(entry);
  }
  return out;
}

const char* form_name(CanonicalForm f) {
  switch (f) {
    case CanonicalForm::jordan2:
      return "jordan2";
    case CanonicalForm::jordan3:
      return "jordan3";
    case CanonicalForm::conformal:
      return "conformal";
    default:
      return "diagonal";
  }
}

int cmd_canonical(const Flags& f, const Resolved& r, std::ostream& os) {
  int code = 0;
  std::visit(
      [&](const auto& a) {
        const auto d = decompose(a, r.tol);
        const auto pair = canonical(d, a);
        const auto rep = eigen(d, a);
        const double bound = pair.residual_bound(a);
        const bool ok = pair.residual <= bound;
        code = ok ? 0 : 1;
        const std::string name(case_name(d.spectrum));
        if (f.json) {
          json j = echo(r);
          j["case"] = name;
          j["result"] = {{"form", form_name(pair.form)},
                         {"T", json_mat(pair.t)},
                         {"C", json_mat(pair.c)},
                         {"T_inv", json_mat(pair.t_inv)},
                         {"eigen", eigen_json(rep)},
                         {"reconstruction_residual", pair.residual},
                         {"residual_bound", bound}};
          j["modes"] = json::array();
          j["residuals"] = residual_json(d);
          emit(os, j);
          return;
        }
        os << "case: " << name << "\nform: " << form_name(pair.form) << "\nT =\n";
        print_matrix(os, pair.t, true);
        os << "C =\n";
        print_matrix(os, pair.c, true);
        os << "T^-1 =\n";
        print_matrix(os, pair.t_inv, true);
        os << "eigen:\n";
        for (const auto& e : rep.entries) {
          os << "  lambda = " << snap(e.re);
          if (e.im != 0.0) os << " +- " << snap(e.im) << "i";
          os << "  [" << e.source << "]";
          for (const auto& v : e.basis) os << ' ' << vec_text(v, true);
          os << '\n';
          if (e.im != 0.0)
            os << "    eigenvector for " << snap(e.re) << " + " << snap(e.im) << "i: "
               << vec_text(e.vec_re, true) << " + i " << vec_text(e.vec_im, true) << '\n';
        }
        os << "residual |A - T C T^-1| = " << num(pair.residual) << " (bound " << num(bound) << ")\n";
      },
      r.a);
  return code;
}

int cmd_verify(const Flags& f, const Resolved& r, std::ostream& os) {
  if (!r.t) throw InputError("verify needs --t");
  const double t = *r.t;
  std::vector<std::pair<std::string, double>> checks;
  std::string name;
  json residuals;
  std::visit(Overloaded{[&](const Mat2& a) {
                          const Decomp2 d = decompose(a, r.tol);
                          name = case_name(d.spectrum);
                          residuals = residual_json(d);
                          checks.emplace_back("exp(tA)", relative_error(expm(d, t), oracle::expm_series(a, t)));
                          checks.emplace_back("cos(A)", relative_error(cosm(d), oracle::trig_series(a, oracle::Trig::cos)));
                          checks.emplace_back("sin(A)", relative_error(sinm(d), oracle::trig_series(a, oracle::Trig::sin)));
                          checks.emplace_back("cosh(A)", relative_error(coshm(d), oracle::trig_series(a, oracle::Trig::cosh)));
                          checks.emplace_back("sinh(A)", relative_error(sinhm(d), oracle::trig_series(a, oracle::Trig::sinh)));
                          for (int sign : {1, -1}) {
                            const ComplexMat2 z = expim(d, sign);
                            const ComplexMat2 ref = oracle::expim_series(a, sign);
                            const double diff = std::max(max_abs(z.re - ref.re), max_abs(z.im - ref.im));
                            const double size = std::max(max_abs(ref.re), max_abs(ref.im));
                            checks.emplace_back(sign > 0 ? "e^{iA}" : "e^{-iA}", size > 0.0 ? diff / size : diff);
                          }
                        },
                        [&](const Mat3& a) {
                          const Decomp3 d = decompose(a, r.tol);
                          name = case_name(d.spectrum);
                          residuals = residual_json(d);
                          checks.emplace_back("exp(tA)", relative_error(expm(d, t), oracle::expm_series(a, t)));
                        }},
             r.a);

  double worst = 0.0;
  for (const auto& [label, e] : checks) worst = std::max(worst, e);
  const bool pass = worst <= kVerifyThreshold;

  if (f.json) {
    json j = echo(r);
    json per = json::object();
    for (const auto& [label, e] : checks) per[label] = e;
    j["case"] = name;
    j["result"] = {{"max_relative_error", worst},
                   {"threshold", kVerifyThreshold},
                   {"checks", per},
                   {"status", pass ? "PASS" : "FAIL"}};
    j["modes"] = json::array();
    j["residuals"] = residuals;
    emit(os, j);
  } else {
    os << "case: " << name << '\n';
    for (const auto& [label, e] : checks) os << fmt::format("  {:<10} relative error {:.3e}\n", label, e);
    os << fmt::format("max relative error {:.3e} (threshold {:.0e})\n", worst, kVerifyThreshold);
    os << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form matrix functions and linear ODE solutions for 2x2 and 3x3 matrices",
               "matexp"};
  app.require_subcommand(1);
  Flags f;

  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("--matrix", f.matrix, "JSON file or inline literal such as \"3,2;-8,-5\"")
        ->required();
    sub->add_option("--tol", f.tol, "relative classification tolerance (default 1e-9)");
  };

  CLI::App* exp = app.add_subcommand("exp", "matrix exponential e^{tA}");
  add_matrix(exp);
  exp->add_option("--t", f.t, "time");
  exp->add_flag("--closed-form", f.closed_form, "show the formula and its pieces");
  exp->add_flag("--json", f.json, "machine-readable output");

  CLI::App* fn = app.add_subcommand("fn", "cos, sin, cosh, sinh, e^{iA}, e^{-iA} of a 2x2 matrix");
  add_matrix(fn);
  fn->add_option("--which", f.which, "function")
      ->required()
      ->check(CLI::IsMember({"cos", "sin", "cosh", "sinh", "expi+", "expi-"}));
  fn->add_flag("--json", f.json, "machine-readable output");

  CLI::App* solve = app.add_subcommand("solve", "solve x' = Ax, x(0) = x0");
  add_matrix(solve);
  solve->add_option("--x0", f.x0, "initial value, comma separated");
  auto* t_opt = solve->add_option("--t", f.t, "time");
  auto* g_opt = solve->add_option("--grid", f.grid, "START:STOP:STEP");
  t_opt->excludes(g_opt);
  solve->add_flag("--closed-form", f.closed_form, "show the mode expansion");
  solve->add_flag("--json", f.json, "machine-readable output");

  CLI::App* canon = app.add_subcommand("canonical", "canonical form A = T C T^-1 and eigenvectors");
  add_matrix(canon);
  canon->add_flag("--json", f.json, "machine-readable output");

  CLI::App* verify = app.add_subcommand("verify", "compare the closed form with the series oracle");
  add_matrix(verify);
  verify->add_option("--t", f.t, "time");
  verify->add_flag("--json", f.json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    const Resolved r = resolve(f);
    if (exp->parsed()) code = cmd_exp(f, r, buffer);
    if (fn->parsed()) code = cmd_fn(f, r, buffer);
    if (solve->parsed()) code = cmd_solve(f, r, buffer);
    if (canon->parsed()) code = cmd_canonical(f, r, buffer);
    if (verify->parsed()) code = cmd_verify(f, r, buffer);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateDecomposition& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << buffer.str();
  return code;
}

}  // namespace matexp::cli
