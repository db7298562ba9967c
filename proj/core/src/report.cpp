#include "yukawa/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace yukawa {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

std::string_view to_string(Relation r) { return r == Relation::le ? "le" : "eq"; }

void MarginReport::add(GridPoint point, double l, double r, double scale, Relation rel) {
  add_with_allowance(std::move(point), l, r, tolerance.allowance(std::abs(scale)), rel);
}

void MarginReport::add_with_allowance(GridPoint point, double l, double r, double allowance, Relation rel) {
  grid.push_back(std::move(point));
  relations.push_back(rel);
  lhs.push_back(l);
  rhs.push_back(r);
  margins.push_back(rel == Relation::le ? r - l : -std::abs(l - r));
  allowances.push_back(allowance);
}

void MarginReport::constant(std::string name, double value) { constants.emplace_back(std::move(name), value); }

void MarginReport::note(std::string text) { notes.push_back(std::move(text)); }

void MarginReport::finalize() {
  if (verdict == Verdict::inapplicable) return;
  min_margin = margins.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  bool ok = true;
  for (std::size_t i = 0; i < margins.size(); ++i) {
    min_margin = std::min(min_margin, margins[i]);
    if (!(margins[i] >= -allowances[i])) ok = false;
  }
  verdict = ok ? Verdict::pass : Verdict::fail;
}

bool MarginReport::near_violation() const {
  for (std::size_t i = 0; i < margins.size(); ++i) {
    if (relations[i] == Relation::le && margins[i] < 0.0 && margins[i] > -allowances[i]) return true;
  }
  return false;
}

MarginReport MarginReport::inapplicable(std::string check_id, std::string solution, std::string reason) {
  MarginReport r;
  r.check_id = std::move(check_id);
  r.solution = std::move(solution);
  r.verdict = Verdict::inapplicable;
  r.reason = std::move(reason);
  return r;
}

}  // namespace yukawa
