#include "fopid/controller.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "kv_detail.hpp"

namespace fopid {

void FocParams::validate() const {
  if (!std::isfinite(K) || !std::isfinite(Ti) || !std::isfinite(Td))
    throw InvalidParams("FocParams: K, Ti, Td must be finite");
  if (K == 0.0 && Ti == 0.0 && Td == 0.0)
    throw InvalidParams("FocParams: at least one branch must be active");
  if (Ti != 0.0 && !(lambda > 0.0 && lambda < 1.0))
    throw InvalidParams("FocParams: lambda must lie in (0, 1) when Ti is active");
  if (Td != 0.0 && !(delta > 0.0 && delta < 1.0))
    throw InvalidParams("FocParams: delta must lie in (0, 1) when Td is active");
  if (p < 1 || q < 1 || p != q)
    throw InvalidParams("FocParams: approximation degrees require p == q >= 1");
}

FocDigital design_foc(const FocParams& params) {
  params.validate();
  FocDigital foc;
  foc.params = params;

  if (params.K != 0.0) foc.proportional = RationalTF::constant(params.K);
  if (params.Ti != 0.0) {
    OperatorSpec spec{params.gf, -params.lambda, params.p, params.q};
    RationalTF tf = discretize_operator(spec);
    tf.gain *= params.Ti;
    foc.integral = tf;
  }
  if (params.Td != 0.0) {
    OperatorSpec spec{params.gf, +params.delta, params.p, params.q};
    RationalTF tf = discretize_operator(spec);
    tf.gain *= params.Td;
    foc.derivative = tf;
  }

  for (const auto* branch : {&foc.integral, &foc.derivative}) {
    if (*branch && !stability_report(**branch).stable)
      throw std::runtime_error("design_foc: discretized branch is unstable");
  }
  return foc;
}

RationalTF combine_tf(const FocDigital& foc) {
  // Accumulate gain-folded num/den over a common denominator.
  Polynomial num{0.0};
  Polynomial den{1.0};
  for (const auto* branch : {&foc.proportional, &foc.integral, &foc.derivative}) {
    if (!*branch) continue;
    const RationalTF& t = **branch;
    num = poly_add(poly_mul(num, t.den), poly_scale(poly_mul(t.num, den), t.gain));
    den = poly_mul(den, t.den);
  }
  if (num.is_zero() && den.degree() == 0)
    return RationalTF::constant(0.0);
  return RationalTF(1.0, num.trimmed(), den.trimmed()).monic();
}

DiffEqCoeffs to_difference_equation(const RationalTF& tf) {
  if (tf.den.coeffs[0] == 0.0)
    throw DegenerateInput("to_difference_equation: denominator constant coefficient is zero");
  DiffEqCoeffs c;
  const double d0 = tf.den.coeffs[0];
  c.b.reserve(tf.num.coeffs.size());
  for (double v : tf.num.coeffs) c.b.push_back(tf.gain * v / d0);
  c.a.reserve(tf.den.coeffs.size());
  for (double v : tf.den.coeffs) c.a.push_back(v / d0);
  c.a[0] = 1.0;
  return c;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void append_params(std::ostringstream& os, const FocParams& p, const std::string& prefix) {
  os << prefix << "format = flat-table\n";
  os << prefix << "gf = " << to_string(p.gf.kind) << "\n";
  os << prefix << "T = " << format_g17(p.gf.T) << "\n";
  os << prefix << "pq = " << p.p << "\n";
  os << prefix << "K = " << format_g17(p.K) << "\n";
  os << prefix << "Ti = " << format_g17(p.Ti) << "\n";
  os << prefix << "Td = " << format_g17(p.Td) << "\n";
  os << prefix << "lambda = " << format_g17(p.lambda) << "\n";
  os << prefix << "delta = " << format_g17(p.delta) << "\n";
}

void append_coeff_line(std::ostringstream& os, const char* name,
                       const std::vector<double>& v) {
  os << name << " =";
  for (double c : v) os << ' ' << format_g17(c);
  os << '\n';
}

std::string sanitize_ident(const std::string& s) {
  std::string out;
  for (char c : s) out.push_back(c == '-' ? '_' : c);
  return out;
}

std::string flat_table(const FocDigital& foc, const std::vector<std::string>& warnings) {
  std::ostringstream os;
  os << "# fopid coefficient table\n";
  append_params(os, foc.params, "");
  for (const auto& w : warnings) os << "# warning: " << w << "\n";

  if (foc.proportional) {
    os << "\n[branch proportional]\n";
    os << "gain = " << format_g17(foc.params.K) << "\n";
  }
  const std::pair<const char*, const std::optional<RationalTF>*> dyn[] = {
      {"integral", &foc.integral}, {"derivative", &foc.derivative}};
  for (const auto& [name, branch] : dyn) {
    if (!*branch) continue;
    const DiffEqCoeffs c = to_difference_equation(**branch);
    os << "\n[branch " << name << "]\n";
    append_coeff_line(os, "b", c.b);
    append_coeff_line(os, "a", c.a);
  }
  return os.str();
}

std::string embedded_header(const FocDigital& foc, const std::vector<std::string>& warnings) {
  std::ostringstream os;
  os << "/* fopid controller coefficients */\n";
  os << "/*\n";
  {
    std::ostringstream prov;
    append_params(prov, foc.params, " * ");
    os << prov.str();
  }
  for (const auto& w : warnings) os << " * warning: " << w << "\n";
  os << " */\n";
  os << "#ifndef FOPID_COEFFS_H\n#define FOPID_COEFFS_H\n\n";
  os << "static const double fopid_sample_period = " << format_g17(foc.params.gf.T) << ";\n";
  os << "static const double fopid_k_gain = " << format_g17(foc.params.K) << ";\n";

  const std::pair<const char*, const std::optional<RationalTF>*> dyn[] = {
      {"integral", &foc.integral}, {"derivative", &foc.derivative}};
  for (const auto& [name, branch] : dyn) {
    if (!*branch) continue;
    const DiffEqCoeffs c = to_difference_equation(**branch);
    const std::string ident = sanitize_ident(name);
    os << "static const double fopid_" << ident << "_b[" << c.b.size() << "] = {";
    for (std::size_t i = 0; i < c.b.size(); ++i)
      os << (i ? ", " : " ") << format_g17(c.b[i]);
    os << " };\n";
    os << "static const double fopid_" << ident << "_a[" << c.a.size() << "] = {";
    for (std::size_t i = 0; i < c.a.size(); ++i)
      os << (i ? ", " : " ") << format_g17(c.a[i]);
    os << " };\n";
  }
  os << "\n#endif\n";
  return os.str();
}

std::vector<double> parse_coeff_values(const std::string& s, const std::string& key) {
  std::vector<double> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(detail::parse_double(tok, key));
  if (out.empty()) throw std::invalid_argument("import_coeffs: empty coefficient list for " + key);
  return out;
}

}  // namespace

std::string export_coeffs(const FocDigital& foc, ExportFormat format,
                          const std::vector<std::string>& warnings) {
  return format == ExportFormat::FlatTable ? flat_table(foc, warnings)
                                           : embedded_header(foc, warnings);
}

FocDigital import_coeffs(const std::string& text) {
  FocDigital foc;
  std::istringstream is(text);
  std::string line;
  std::string section;
  std::vector<double> b, a;
  bool have_gain = false;
  double gain = 0.0;

  auto flush_section = [&]() {
    if (section.empty()) return;
    if (section == "branch proportional") {
      if (!have_gain) throw std::invalid_argument("import_coeffs: proportional branch lacks gain");
      foc.proportional = RationalTF::constant(gain);
    } else if (section == "branch integral" || section == "branch derivative") {
      if (b.empty() || a.empty())
        throw std::invalid_argument("import_coeffs: branch lacks b/a lines: " + section);
      RationalTF tf(1.0, Polynomial(b), Polynomial(a));
      if (section == "branch integral") foc.integral = tf; else foc.derivative = tf;
    } else {
      throw std::invalid_argument("import_coeffs: unknown section [" + section + "]");
    }
    b.clear(); a.clear(); have_gain = false;
  };

  while (std::getline(is, line)) {
    const detail::KvLine kv = detail::parse_kv_line(line);
    switch (kv.kind) {
      case detail::KvLine::Kind::Blank:
      case detail::KvLine::Kind::Comment:
        break;
      case detail::KvLine::Kind::Section:
        flush_section();
        section = kv.key;
        break;
      case detail::KvLine::Kind::Malformed:
        throw std::invalid_argument("import_coeffs: malformed line: " + kv.value);
      case detail::KvLine::Kind::Pair: {
        if (!section.empty()) {
          if (kv.key == "gain") { gain = detail::parse_double(kv.value, kv.key); have_gain = true; }
          else if (kv.key == "b") b = parse_coeff_values(kv.value, kv.key);
          else if (kv.key == "a") a = parse_coeff_values(kv.value, kv.key);
          else throw std::invalid_argument("import_coeffs: unknown branch key: " + kv.key);
          break;
        }
        FocParams& p = foc.params;
        if (kv.key == "format") {
          if (kv.value != "flat-table")
            throw std::invalid_argument("import_coeffs: unsupported format: " + kv.value);
        } else if (kv.key == "gf") p.gf.kind = gf_kind_from_string(kv.value);
        else if (kv.key == "T") p.gf = GeneratingFunction(p.gf.kind, detail::parse_double(kv.value, kv.key));
        else if (kv.key == "pq") { p.p = static_cast<int>(detail::parse_long(kv.value, kv.key)); p.q = p.p; }
        else if (kv.key == "K") p.K = detail::parse_double(kv.value, kv.key);
        else if (kv.key == "Ti") p.Ti = detail::parse_double(kv.value, kv.key);
        else if (kv.key == "Td") p.Td = detail::parse_double(kv.value, kv.key);
        else if (kv.key == "lambda") p.lambda = detail::parse_double(kv.value, kv.key);
        else if (kv.key == "delta") p.delta = detail::parse_double(kv.value, kv.key);
        else throw std::invalid_argument("import_coeffs: unknown key: " + kv.key);
        break;
      }
    }
  }
  flush_section();
  return foc;
}

}  // namespace fopid
