#include "stabkit/sweep_output.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <vector>

namespace stabkit {

namespace {

constexpr double kWidth = 800, kHeight = 520, kMargin = 60;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "beta,phi,upper_bound,envelope,nef_margin\n";
  for (const auto& r : rows) {
    out += to_pq(r.beta);
    out += ',';
    out += r.phi ? to_pq(*r.phi) : "unknown";
    out += ',';
    out += to_pq(r.upper_bound);
    out += ',';
    if (r.envelope) out += to_pq(*r.envelope);
    out += ',';
    out += to_pq(r.nef_margin);
    out += '\n';
  }
  return out;
}

std::string sweep_svg(std::span<const SweepRow> rows, const std::string& title) {
  double b0 = 0, b1 = 1;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  auto include = [&](double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };
  if (!rows.empty()) {
    b0 = to_double(rows.front().beta);
    b1 = to_double(rows.back().beta);
  }
  for (const auto& r : rows) {
    include(to_double(r.upper_bound));
    if (r.phi && r.phi->is_finite()) include(to_double(r.phi->value()));
    if (r.envelope) include(to_double(*r.envelope));
  }
  if (!(lo < hi)) {
    lo = (lo == std::numeric_limits<double>::infinity()) ? 0 : lo - 1;
    hi = lo + 2;
  }
  if (!(b0 < b1)) b1 = b0 + 1;
  const double pad = (hi - lo) * 0.05;
  lo -= pad;
  hi += pad;
  auto px = [&](double beta) { return kMargin + (beta - b0) / (b1 - b0) * (kWidth - 2 * kMargin); };
  auto py = [&](double alpha) { return kHeight - kMargin - (alpha - lo) / (hi - lo) * (kHeight - 2 * kMargin); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
         escape(title) + "</text>\n";
  // axes
  out += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(kHeight - kMargin) + "\" x2=\"" +
         num(kWidth - kMargin) + "\" y2=\"" + num(kHeight - kMargin) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(kMargin) + "\" x2=\"" + num(kMargin) +
         "\" y2=\"" + num(kHeight - kMargin) + "\" stroke=\"black\"/>\n";
  out += "<text x=\"" + num(kWidth - kMargin) + "\" y=\"" + num(kHeight - kMargin + 20) +
         "\" text-anchor=\"end\" font-size=\"13\">beta</text>\n";
  out += "<text x=\"" + num(kMargin - 10) + "\" y=\"" + num(kMargin - 10) +
         "\" font-size=\"13\">alpha</text>\n";
  for (const auto& [v, anchor] : {std::pair{b0, "start"}, std::pair{b1, "end"}})
    out += "<text x=\"" + num(px(v)) + "\" y=\"" + num(kHeight - kMargin + 36) + "\" text-anchor=\"" +
           anchor + "\" font-size=\"11\">" + num(v) + "</text>\n";
  for (double v : {lo, hi})
    out += "<text x=\"" + num(kMargin - 6) + "\" y=\"" + num(py(v)) +
           "\" text-anchor=\"end\" font-size=\"11\">" + num(v) + "</text>\n";

  std::string bg;
  for (const auto& r : rows) bg += num(px(to_double(r.beta))) + "," + num(py(to_double(r.upper_bound))) + " ";
  out += "<polyline fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"6,4\" points=\"" + bg + "\"/>\n";

  // Φ is drawn piece by piece; unknown and −∞ values break the curve.
  std::vector<std::string> pieces(1);
  for (const auto& r : rows) {
    if (r.phi && r.phi->is_finite()) {
      pieces.back() += num(px(to_double(r.beta))) + "," + num(py(to_double(r.phi->value()))) + " ";
    } else if (!pieces.back().empty()) {
      pieces.emplace_back();
    }
  }
  for (const auto& p : pieces)
    if (!p.empty()) out += "<polyline fill=\"none\" stroke=\"#1f4e9a\" stroke-width=\"2\" points=\"" + p + "\"/>\n";

  for (const auto& r : rows)
    if (r.envelope)
      out += "<circle cx=\"" + num(px(to_double(r.beta))) + "\" cy=\"" + num(py(to_double(*r.envelope))) +
             "\" r=\"2.5\" fill=\"#c0392b\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace stabkit
