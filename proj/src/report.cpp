#include "slope_lab/report.hpp"

#include "slope_lab/errors.hpp"
#include "slope_lab/families.hpp"
#include "slope_lab/json_io.hpp"

#include <array>
#include <functional>
#include <sstream>

namespace slope_lab {

namespace {

Rational q(long num, long den = 1) { return frac(Integer(num), Integer(den)); }

BundleOnCurve bundle(long rank, const Rational& degree, const Rational& mu_minus) { return {rank, degree, mu_minus}; }

/// Row whose slope must equal `expected`; an optional BS target is also matched.
ExampleRow family_row(std::string id, const FamilyRecord& rec, const Rational& expected,
                      std::optional<Rational> expected_bs = std::nullopt, std::optional<bool> expected_fpos = std::nullopt) {
  ExampleRow row;
  row.id = std::move(id);
  const Rational s = slope(rec.inv);
  const Rational bs = bs_invariant(rec.inv);
  const bool fpos = check_f_positive(rec.inv).holds;
  row.slope = to_string(s);
  row.bs = to_string(bs);
  row.f_positive = fpos;
  row.expected = to_string(expected);
  row.match = s == expected;
  if (expected_bs) {
    row.expected += " (BS " + to_string(*expected_bs) + ")";
    row.match = row.match && bs == *expected_bs;
  }
  if (expected_fpos) row.match = row.match && fpos == *expected_fpos;
  return row;
}

WpsHypersurfaceFamily wps(std::vector<long> a, long d, long e, long h = 1, long l = 1) {
  return WpsHypersurfaceFamily{WeightVector::from_longs(a), d, e, h, l};
}

void add_projective_rows(std::vector<ExampleRow>& rows) {
  const BundleOnCurve E3 = bundle(3, q(5), q(1));
  const FamilyRecord pn = family_pn(E3);
  rows.push_back(family_row("pn n=2 degE=5", pn, 1, q(1)));
  rows.push_back(family_row("pn double m=3", family_double_cover(pn, {Integer(3), {}, {}}), 2, q(2)));
  const FamilyRecord vero = family_veronese(E3);
  rows.push_back(family_row("veronese degE=5", vero, 2, q(2)));
  rows.push_back(family_row("veronese double m=3", family_double_cover(vero, {Integer(3), {}, {}}), 4, q(4)));

  for (long n : {1L, 2L, 3L}) {
    const BundleOnCurve E = bundle(n + 2, q(7), q(1));
    const Rational degA = q(-2);
    const auto rec = family_quadric(E, degA);
    rows.push_back(family_row("quadric n=" + std::to_string(n) + " degE=7 degA=-2", rec, 2 + degA / E.degree,
                              2 - q(2, n + 2), degA >= -2 * E.degree / Rational(E.rank)));
  }
  for (long n : {2L, 3L}) {
    for (long r = 3; r <= n + 2; ++r) {
      const auto rec = family_quadric_low_rank(n, r, Integer(1));
      rows.push_back(family_row("quadric_low_rank r=" + std::to_string(r) + " n=" + std::to_string(n), rec,
                                2 - q(2, r), 2 - q(2, n + 2), r == n + 2));
    }
  }
}

void add_scroll_rows(std::vector<ExampleRow>& rows) {
  for (long d : {1L, 2L, 3L}) {
    ScrollFamily s{bundle(2, q(3), q(1)), {d, d, d}, {q(0), q(1), q(5, 2)}};
    const Rational expected = q(4 * d, d + 1);
    rows.push_back(family_row("scroll equal d=" + std::to_string(d) + " n=3", family_scroll(s), expected, expected, true));
  }
  for (long d : {2L, 4L}) {
    ScrollFamily s{bundle(2, q(1), q(0)), {d, 0}, {q(2), q(0)}};
    rows.push_back(family_row("scroll extreme d=" + std::to_string(d), family_scroll(s), q(2 * d, d + 1)));
  }
  {
    ScrollFamily s{bundle(2, q(2), q(1)), {3, 1}, {q(1), q(0)}};
    const FamilyRecord base = family_scroll(s);
    rows.push_back(family_row("scroll double alpha=2 beta=1", family_double_cover(base, {{}, Integer(2), Integer(1)}),
                              2 * slope(base.inv)));
    ExampleRow row;
    row.id = "scroll a_1 limit d=(3,1)";
    const Rational limit = scroll_a1_limit_slope(s);
    row.slope = to_string(limit);
    row.bs = to_string(bs_invariant(base.inv));
    row.expected = to_string(q(3 + 4, 3 + 1));
    row.match = limit == q(7, 4);
    rows.push_back(row);
  }
}

void add_wps_rows(std::vector<ExampleRow>& rows) {
  {
    const FamilyRecord rec = family_from_json(
        Json{{"kind", "wps"}, {"a", {1, 1, 8, 12}}, {"d", 24}, {"e", 2}, {"h", 1}, {"l", 1}});
    ExampleRow row = family_row("xiao (1,1,8,12) d=24 e=2", rec, q(37, 36));
    const CheckReport check = check_slope_inequality(TheoremId::XIAO_H1, rec.inv, HypothesisPolicy::report);
    row.detail = "XIAO_H1 coefficient " + to_string(*check.coefficient) + (check.holds ? " holds" : " fails");
    row.match = row.match && !check.holds && *check.coefficient == q(4, 3) &&
                rec.attributes.at("relative_canonical") == "true";
    rows.push_back(row);
  }
  for (long n = 1; n <= 5; ++n) {
    std::vector<long> a(static_cast<std::size_t>(n), 1);
    a.push_back(2);
    a.push_back(n + 3);
    const FamilyRecord rec = wps_family(wps(a, 2 * (n + 3), 1), WpsOptions{n != 1});
    ExampleRow row = family_row("example III n=" + std::to_string(n), rec, q(1, 2 * n * (n + 3)) + q(n + 1, n));
    if (n == 1) row.detail = "weights (1,2,4) not well-formed";
    rows.push_back(row);
  }
  const std::vector<std::array<long, 3>> example_one{{1, 2, 2}, {2, 3, 1}, {3, 2, 3}, {2, 5, 2}};
  for (const auto& [n, alpha, m] : example_one) {
    std::vector<long> a{1, 1};
    for (long i = 0; i < n; ++i) a.push_back(alpha);
    const FamilyRecord rec = wps_family(wps(a, m * alpha, 1));
    const Rational expected = Rational((n + 1) * m * alpha + 1) / Rational(2 * pow(Integer(alpha), n));
    ExampleRow row = family_row("example I n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) +
                                    " m=" + std::to_string(m),
                                rec, expected);
    row.match = row.match && wps_special_slope(rec.wps.value()) == expected;
    rows.push_back(row);
  }
  for (const auto& [alpha, beta, k] : std::vector<std::array<long, 3>>{{2, 3, 5}, {3, 5, 7}, {2, 5, 9}}) {
    const IvBisResult res = example_iv_bis(alpha, beta, k);
    const FamilyRecord rec = wps_family(res.fam);
    ExampleRow row = family_row("example IV-bis (" + std::to_string(alpha) + "," + std::to_string(beta) + "," +
                                    std::to_string(k) + ")",
                                rec, res.slope);
    row.detail = "threshold " + to_string(res.threshold) + (res.below_threshold ? ", slope below" : ", slope above");
    rows.push_back(row);
  }
  for (long n = 1; n <= 6; ++n) {
    const SylvesterResult res = sylvester_family(n);
    const FamilyRecord rec = wps_family(res.fam);
    Rational pinned = res.slope;
    if (n == 1) pinned = q(13, 6);
    if (n == 2) pinned = q(55, 108);
    ExampleRow row = family_row("sylvester n=" + std::to_string(n), rec, pinned);
    row.match = row.match && res.slope == pinned && 1 + res.fam.a.weight_sum() == res.fam.d &&
                (n == 1 || res.slope < 1);
    row.detail = "d = " + res.fam.d.get_str();
    rows.push_back(row);
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fpos_text(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : "-"; }

}  // namespace

std::vector<ExampleRow> example_rows() {
  std::vector<ExampleRow> rows;
  add_projective_rows(rows);
  add_scroll_rows(rows);
  add_wps_rows(rows);
  return rows;
}

ReportFormat parse_report_format(const std::string& text) {
  if (text == "md") return ReportFormat::md;
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw Error(ErrorCode::UnknownIdentifier, "unknown report format '" + text + "'");
}

std::string render_rows(const std::vector<ExampleRow>& rows, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::md:
      out << "| family | slope | BS | f-positive | expected | match | detail |\n";
      out << "|---|---|---|---|---|---|---|\n";
      for (const auto& r : rows) {
        out << "| " << r.id << " | " << r.slope << " | " << r.bs << " | " << fpos_text(r.f_positive) << " | "
            << r.expected << " | " << (r.match ? "true" : "false") << " | " << r.detail << " |\n";
      }
      break;
    case ReportFormat::csv:
      out << "family,slope,bs,f_positive,expected,match,detail\n";
      for (const auto& r : rows) {
        out << csv_field(r.id) << ',' << r.slope << ',' << r.bs << ',' << fpos_text(r.f_positive) << ','
            << csv_field(r.expected) << ',' << (r.match ? "true" : "false") << ',' << csv_field(r.detail) << '\n';
      }
      break;
    case ReportFormat::json: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        arr.push_back({{"family", r.id},
                       {"slope", r.slope},
                       {"bs", r.bs},
                       {"f_positive", r.f_positive ? Json(*r.f_positive) : Json(nullptr)},
                       {"expected", r.expected},
                       {"match", r.match},
                       {"detail", r.detail}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace slope_lab
