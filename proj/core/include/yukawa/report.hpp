#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "yukawa/types.hpp"

namespace yukawa {

enum class Verdict { pass, fail, inapplicable };
std::string_view to_string(Verdict v);

/// `le` rows assert lhs <= rhs with margin rhs - lhs; `eq` rows assert
/// lhs = rhs with margin -|lhs - rhs|.
enum class Relation { le, eq };
std::string_view to_string(Relation r);

using NamedValues = std::vector<std::pair<std::string, double>>;

struct GridPoint {
  std::string label;
  NamedValues params;
};

struct MarginReport {
  std::string check_id;
  std::string solution;
  std::vector<GridPoint> grid;
  std::vector<Relation> relations;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::vector<double> margins;
  std::vector<double> allowances;
  double min_margin = 0.0;
  Tolerance tolerance;
  Verdict verdict = Verdict::pass;
  std::string reason;
  NamedValues constants;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, int>> quadrature;
  bool auto_doubled = false;

  std::size_t size() const { return lhs.size(); }

  /// Appends a row whose allowance is tolerance.allowance(scale).
  void add(GridPoint point, double l, double r, double scale, Relation rel = Relation::le);
  /// Appends a row with an explicit allowance.
  void add_with_allowance(GridPoint point, double l, double r, double allowance, Relation rel = Relation::le);
  void constant(std::string name, double value);
  void note(std::string text);

  /// Computes min_margin and the verdict: pass iff every margin is at least
  /// minus its allowance. A report without rows passes with min_margin 0.
  void finalize();

  /// True when some inequality row has a margin in (-allowance, 0).
  bool near_violation() const;

  static MarginReport inapplicable(std::string check_id, std::string solution, std::string reason);
};

}  // namespace yukawa
