#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "unitfrac/report_io.hpp"

using namespace unitfrac;

namespace {

template <class T>
T round_trip(const T& value) {
  const std::string text = Json(value).dump();
  return Json::parse(text).get<T>();
}

std::string csv_text(const CsvTable& t) {
  std::ostringstream out;
  t.write(out);
  return out.str();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("big integers serialize as numbers or strings") {
  CHECK(Json(BigInt(42)).dump() == "42");
  CHECK(Json(BigInt(-7)).dump() == "-7");
  const BigInt huge = (BigInt(1) << 100) + 3;
  CHECK(Json(huge).is_string());
  CHECK(Json(huge).get<BigInt>() == huge);
  CHECK(Json::parse("18446744073709551615").get<BigInt>() == BigInt("18446744073709551615"));
}

TEST_CASE("decomposition JSON is flat") {
  const auto d = *decompose(ProblemParams{4, 5, 2, 4});
  const Json j = d;
  CHECK(j.at("x") == 2);
  CHECK(j.at("y") == 4);
  CHECK(j.at("z") == 20);
  CHECK(j.at("t") == 4);
  CHECK(j.at("m") == 8);
  CHECK(round_trip(d) == d);
}

TEST_CASE("every report type survives a JSON round trip") {
  auto range = verify_range(4, 2, 300, SearchBounds{600, 3});
  escalate_unsolved(range, SearchBounds{600, 3}, 3);
  const auto back = round_trip(range);
  CHECK(back.same_result(range));
  CHECK(back.elapsed_ms == range.elapsed_ms);

  const auto density = zero_density(4, 100, 200);
  CHECK(round_trip(density) == density);

  PrecisionConfig cfg;
  cfg.em_terms = 80;
  cfg.tol = 1e-10;
  CHECK(round_trip(cfg) == cfg);
  CHECK(round_trip(SearchBounds{7, 9}) == SearchBounds{7, 9});
  CHECK(round_trip(ProblemParams{5, 11, 3, 8}) == ProblemParams{5, 11, 3, 8});

  const auto sum = gk_partial_sum(default_scheme(4), 4, Complex(2.0, 1.5), 500);
  const auto sum_back = round_trip(sum);
  CHECK(sum_back.k == sum.k);
  CHECK(sum_back.s == sum.s);
  CHECK(sum_back.N == sum.N);
  CHECK(sum_back.partial == sum.partial);
  CHECK(sum_back.tail_estimate == sum.tail_estimate);
  CHECK(sum_back.reference == sum.reference);
  CHECK(sum_back.abs_error == sum.abs_error);

  const auto scan = scan_critical_line(4, 10.0, 30.0, 0.05);
  const auto scan_back = round_trip(scan);
  CHECK(scan_back.zeros == scan.zeros);
  CHECK(scan_back.step_too_coarse == scan.step_too_coarse);
  CHECK(scan_back.suspect_intervals == scan.suspect_intervals);

  const auto fam = f_zero_locus(4, 1.5, 2.0, 7);
  const auto fam_back = round_trip(fam);
  CHECK(fam_back.k == fam.k);
  CHECK(fam_back.x == fam.x);
  CHECK(fam_back.t == fam.t);
  CHECK(fam_back.n == fam.n);
  CHECK(fam_back.u_roots == fam.u_roots);
  CHECK(fam_back.principal_s == fam.principal_s);
  CHECK(fam_back.branch_period == fam.branch_period);

  const auto triple = params_for(GeneralXT{3.0, 5.0}, 4, 6, Complex(1.3, 2.0));
  const auto triple_back = round_trip(triple);
  CHECK(triple_back.m_s == triple.m_s);
  CHECK(triple_back.y_s == triple.y_s);
  CHECK(triple_back.z_s == triple.z_s);
}

TEST_CASE("complex numbers are re/im objects") {
  const Json j = complex_to_json(Complex(1.5, -2.0));
  CHECK(j.dump() == R"({"im":-2.0,"re":1.5})");
  CHECK(complex_from_json(j) == Complex(1.5, -2.0));
}

TEST_CASE("format_double is shortest round-trip") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -0.0, 123456789.0}) {
    const std::string text = format_double(v);
    CHECK(std::stod(text) == v);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("CSV headers and column counts") {
  const auto d = decompose(ProblemParams{4, 5, 2, 4});
  const std::string one = csv_text(csv_of(&*d, 4, 5));
  CHECK(one == "k,n,solved,x,t,m,y,z\n4,5,1,2,4,8,4,20\n");
  CHECK(csv_text(csv_of(nullptr, 5, 2)) == "k,n,solved,x,t,m,y,z\n5,2,0,,,,,\n");

  const auto range = verify_range(5, 2, 12);
  const std::string range_csv = csv_text(csv_of(range));
  CHECK(first_line(range_csv) == "k,n,solved,x,t,m,y,z");
  CHECK(std::count(range_csv.begin(), range_csv.end(), '\n') == 12);

  CHECK(first_line(csv_text(csv_of(zero_density(4, 10, 20)))) == "k,N,x_max,zero_count,fraction");
  CHECK(first_line(csv_text(csv_of(gk_partial_sum(default_scheme(4), 4, 2.0, 10)))) ==
        "k,s_re,s_im,N,partial_re,partial_im,tail_re,tail_im,reference_re,reference_im,"
        "abs_error");
  const std::string scan_csv = csv_text(csv_of(scan_critical_line(4, 10.0, 30.0, 0.05)));
  CHECK(first_line(scan_csv) == "k,t_lo,t_hi,refined_t,min_abs");
  CHECK(std::count(scan_csv.begin(), scan_csv.end(), '\n') == 4);
  CHECK(first_line(csv_text(csv_of(f_zero_locus(4, 1.0, 1.0, 2), 0.0))) ==
        "k,x,t,n,root,u_re,u_im,s_re,s_im,branch_period,residual");
  // An empty scan still has its header.
  CHECK(csv_text(csv_of(ScanResult{})) == "k,t_lo,t_hi,refined_t,min_abs\n");
}
