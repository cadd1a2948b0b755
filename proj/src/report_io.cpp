#include "unitfrac/report_io.hpp"

#include <charconv>
#include <limits>

namespace nlohmann {

void adl_serializer<unitfrac::BigInt>::to_json(json& j, const unitfrac::BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    j = static_cast<std::int64_t>(v);
  else
    j = v.str();
}

void adl_serializer<unitfrac::BigInt>::from_json(const json& j, unitfrac::BigInt& v) {
  if (j.is_string())
    v = unitfrac::BigInt(j.get<std::string>());
  else if (j.is_number_unsigned())
    v = j.get<std::uint64_t>();
  else
    v = j.get<std::int64_t>();
}

}  // namespace nlohmann

namespace unitfrac {

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

void to_json(Json& j, const ProblemParams& p) {
  j = Json{{"k", p.k}, {"n", p.n}, {"x", p.x}, {"t", p.t}};
}

void from_json(const Json& j, ProblemParams& p) {
  j.at("k").get_to(p.k);
  j.at("n").get_to(p.n);
  j.at("x").get_to(p.x);
  j.at("t").get_to(p.t);
}

void to_json(Json& j, const Decomposition& d) {
  j = Json{{"k", d.params.k}, {"n", d.params.n}, {"x", d.params.x}, {"t", d.params.t},
           {"m", d.m},        {"y", d.y},        {"z", d.z}};
}

void from_json(const Json& j, Decomposition& d) {
  from_json(j, d.params);
  j.at("m").get_to(d.m);
  j.at("y").get_to(d.y);
  j.at("z").get_to(d.z);
}

void to_json(Json& j, const SearchBounds& b) {
  j = Json{{"x_max", b.x_max}, {"t_span", b.t_span}};
}

void from_json(const Json& j, SearchBounds& b) {
  j.at("x_max").get_to(b.x_max);
  j.at("t_span").get_to(b.t_span);
}

void to_json(Json& j, const Escalation& e) { j = Json{{"n", e.n}, {"bounds", e.bounds}}; }

void from_json(const Json& j, Escalation& e) {
  j.at("n").get_to(e.n);
  j.at("bounds").get_to(e.bounds);
}

void to_json(Json& j, const RangeReport& r) {
  j = Json{{"k", r.k},
           {"n_start", r.n_start},
           {"n_end", r.n_end},
           {"solved_count", r.solved_count},
           {"unsolved", r.unsolved},
           {"witnesses", r.witnesses},
           {"escalations", r.escalations},
           {"elapsed_ms", r.elapsed_ms}};
}

void from_json(const Json& j, RangeReport& r) {
  j.at("k").get_to(r.k);
  j.at("n_start").get_to(r.n_start);
  j.at("n_end").get_to(r.n_end);
  j.at("solved_count").get_to(r.solved_count);
  j.at("unsolved").get_to(r.unsolved);
  j.at("witnesses").get_to(r.witnesses);
  j.at("escalations").get_to(r.escalations);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
}

void to_json(Json& j, const DensityReport& r) {
  j = Json{{"k", r.k},
           {"N", r.N},
           {"x_max", r.x_max},
           {"zero_count", r.zero_count},
           {"fraction", r.fraction}};
}

void from_json(const Json& j, DensityReport& r) {
  j.at("k").get_to(r.k);
  j.at("N").get_to(r.N);
  j.at("x_max").get_to(r.x_max);
  j.at("zero_count").get_to(r.zero_count);
  j.at("fraction").get_to(r.fraction);
}

void to_json(Json& j, const PrecisionConfig& c) {
  j = Json{{"em_terms", c.em_terms}, {"em_bernoulli", c.em_bernoulli}, {"tol", c.tol}};
}

void from_json(const Json& j, PrecisionConfig& c) {
  j.at("em_terms").get_to(c.em_terms);
  j.at("em_bernoulli").get_to(c.em_bernoulli);
  j.at("tol").get_to(c.tol);
}

void to_json(Json& j, const SumReport& r) {
  j = Json{{"k", r.k},
           {"s", complex_to_json(r.s)},
           {"N", r.N},
           {"partial", complex_to_json(r.partial)},
           {"tail_estimate", complex_to_json(r.tail_estimate)},
           {"reference", complex_to_json(r.reference)},
           {"abs_error", r.abs_error}};
}

void from_json(const Json& j, SumReport& r) {
  j.at("k").get_to(r.k);
  r.s = complex_from_json(j.at("s"));
  j.at("N").get_to(r.N);
  r.partial = complex_from_json(j.at("partial"));
  r.tail_estimate = complex_from_json(j.at("tail_estimate"));
  r.reference = complex_from_json(j.at("reference"));
  j.at("abs_error").get_to(r.abs_error);
}

void to_json(Json& j, const ZeroBracket& z) {
  j = Json{{"k", z.k},
           {"t_lo", z.t_lo},
           {"t_hi", z.t_hi},
           {"refined_t", z.refined_t},
           {"min_abs", z.min_abs}};
}

void from_json(const Json& j, ZeroBracket& z) {
  j.at("k").get_to(z.k);
  j.at("t_lo").get_to(z.t_lo);
  j.at("t_hi").get_to(z.t_hi);
  j.at("refined_t").get_to(z.refined_t);
  j.at("min_abs").get_to(z.min_abs);
}

void to_json(Json& j, const ScanResult& r) {
  j = Json{{"zeros", r.zeros},
           {"step_too_coarse", r.step_too_coarse},
           {"suspect_intervals", r.suspect_intervals}};
}

void from_json(const Json& j, ScanResult& r) {
  j.at("zeros").get_to(r.zeros);
  j.at("step_too_coarse").get_to(r.step_too_coarse);
  j.at("suspect_intervals").get_to(r.suspect_intervals);
}

void to_json(Json& j, const FZeroFamily& f) {
  j = Json{{"k", f.k},
           {"x", f.x},
           {"t", f.t},
           {"n", f.n},
           {"u_roots", {complex_to_json(f.u_roots[0]), complex_to_json(f.u_roots[1])}},
           {"principal_s",
            {complex_to_json(f.principal_s[0]), complex_to_json(f.principal_s[1])}},
           {"branch_period", f.branch_period}};
}

void from_json(const Json& j, FZeroFamily& f) {
  j.at("k").get_to(f.k);
  j.at("x").get_to(f.x);
  j.at("t").get_to(f.t);
  j.at("n").get_to(f.n);
  for (std::size_t i = 0; i < 2; ++i) {
    f.u_roots[i] = complex_from_json(j.at("u_roots").at(i));
    f.principal_s[i] = complex_from_json(j.at("principal_s").at(i));
  }
  j.at("branch_period").get_to(f.branch_period);
}

void to_json(Json& j, const ParamTriple& p) {
  j = Json{{"x_s", complex_to_json(p.x_s)}, {"t_s", complex_to_json(p.t_s)},
           {"m_s", complex_to_json(p.m_s)}, {"y_s", complex_to_json(p.y_s)},
           {"z_s", complex_to_json(p.z_s)}, {"u", complex_to_json(p.u)}};
}

void from_json(const Json& j, ParamTriple& p) {
  p.x_s = complex_from_json(j.at("x_s"));
  p.t_s = complex_from_json(j.at("t_s"));
  p.m_s = complex_from_json(j.at("m_s"));
  p.y_s = complex_from_json(j.at("y_s"));
  p.z_s = complex_from_json(j.at("z_s"));
  p.u = complex_from_json(j.at("u"));
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void CsvTable::write(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

namespace {

std::vector<std::string> decomposition_cells(const Decomposition& d) {
  return {std::to_string(d.params.x), std::to_string(d.params.t), d.m.str(), d.y.str(),
          d.z.str()};
}

}  // namespace

CsvTable csv_of(const Decomposition* d, std::int64_t k, std::int64_t n) {
  CsvTable t{{"k", "n", "solved", "x", "t", "m", "y", "z"}, {}};
  std::vector<std::string> row{std::to_string(k), std::to_string(n), d ? "1" : "0"};
  if (d) {
    const auto cells = decomposition_cells(*d);
    row.insert(row.end(), cells.begin(), cells.end());
  } else {
    row.resize(t.header.size());
  }
  t.rows.push_back(std::move(row));
  return t;
}

CsvTable csv_of(const RangeReport& r) {
  CsvTable t{{"k", "n", "solved", "x", "t", "m", "y", "z"}, {}};
  std::size_t w = 0;
  for (std::int64_t n = r.n_start; n <= r.n_end; ++n) {
    const Decomposition* d = nullptr;
    if (w < r.witnesses.size() && r.witnesses[w].params.n == n) d = &r.witnesses[w++];
    t.rows.push_back(csv_of(d, r.k, n).rows.front());
  }
  return t;
}

CsvTable csv_of(const DensityReport& r) {
  return {{"k", "N", "x_max", "zero_count", "fraction"},
          {{std::to_string(r.k), std::to_string(r.N), std::to_string(r.x_max),
            std::to_string(r.zero_count), format_double(r.fraction)}}};
}

CsvTable csv_of(const SumReport& r) {
  return {{"k", "s_re", "s_im", "N", "partial_re", "partial_im", "tail_re", "tail_im",
           "reference_re", "reference_im", "abs_error"},
          {{std::to_string(r.k), format_double(r.s.real()), format_double(r.s.imag()),
            std::to_string(r.N), format_double(r.partial.real()),
            format_double(r.partial.imag()), format_double(r.tail_estimate.real()),
            format_double(r.tail_estimate.imag()), format_double(r.reference.real()),
            format_double(r.reference.imag()), format_double(r.abs_error)}}};
}

CsvTable csv_of(const ScanResult& r) {
  CsvTable t{{"k", "t_lo", "t_hi", "refined_t", "min_abs"}, {}};
  for (const auto& z : r.zeros)
    t.rows.push_back({std::to_string(z.k), format_double(z.t_lo), format_double(z.t_hi),
                      format_double(z.refined_t), format_double(z.min_abs)});
  return t;
}

CsvTable csv_of(const FZeroFamily& f, double residual) {
  CsvTable t{{"k", "x", "t", "n", "root", "u_re", "u_im", "s_re", "s_im",
              "branch_period", "residual"},
             {}};
  for (std::size_t i = 0; i < 2; ++i)
    t.rows.push_back({std::to_string(f.k), format_double(f.x), format_double(f.t),
                      std::to_string(f.n), std::to_string(i),
                      format_double(f.u_roots[i].real()), format_double(f.u_roots[i].imag()),
                      format_double(f.principal_s[i].real()),
                      format_double(f.principal_s[i].imag()),
                      format_double(f.branch_period), format_double(residual)});
  return t;
}

}  // namespace unitfrac
