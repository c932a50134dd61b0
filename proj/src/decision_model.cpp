#include "axp/decision_model.hpp"

#include <algorithm>

#include "axp/logic.hpp"
#include "json.hpp"

namespace axp {

std::uint32_t table_index(Individual x, int n) {
  std::uint32_t idx = 0;
  for (int f = 0; f < n; ++f) {
    idx = (idx << 1) | (x.value(f) ? 1u : 0u);
  }
  return idx;
}

Individual individual_from_index(std::uint32_t index, int n) {
  Individual x;
  for (int f = 0; f < n; ++f) {
    if ((index >> (n - 1 - f)) & 1u) x = x.with(f, true);
  }
  return x;
}

DecisionModel DecisionModel::truth_table(FeatureSpace space, std::vector<bool> table) {
  int n = space.size();
  if (table.size() != (std::size_t{1} << n)) {
    throw ParseError("truth table has " + std::to_string(table.size()) +
                     " entries, expected 2^" + std::to_string(n));
  }
  DecisionModel m;
  m.space_ = std::move(space);
  m.kind_ = Kind::TruthTable;
  m.table_ = std::move(table);
  return m;
}

namespace {

// Parses a plain decimal ("-1.25") into an integer numerator and the number
// of fractional digits.
std::pair<std::int64_t, int> parse_decimal(const std::string& s) {
  if (s.empty()) throw ParseError("empty decimal");
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::int64_t num = 0;
  int frac_digits = -1;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.') {
      if (frac_digits >= 0) throw ParseError("malformed decimal: " + s);
      frac_digits = 0;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      any_digit = true;
      if (frac_digits >= 0) ++frac_digits;
    } else {
      throw ParseError("malformed decimal: " + s);
    }
  }
  if (!any_digit) throw ParseError("malformed decimal: " + s);
  return {negative ? -num : num, std::max(frac_digits, 0)};
}

std::string format_decimal(std::int64_t num, int scale) {
  bool negative = num < 0;
  std::string digits = std::to_string(negative ? -num : num);
  std::string out;
  if (scale == 0) {
    out = digits;
  } else {
    while (static_cast<int>(digits.size()) <= scale) digits.insert(0, "0");
    out = digits.substr(0, digits.size() - scale) + "." +
          digits.substr(digits.size() - scale);
  }
  return negative ? "-" + out : out;
}

}  // namespace

DecisionModel DecisionModel::linear_threshold(FeatureSpace space,
                                              std::vector<std::string> weights,
                                              std::string bias) {
  int n = space.size();
  if (static_cast<int>(weights.size()) != n) {
    throw ParseError("weight count does not match feature count");
  }
  std::vector<std::pair<std::int64_t, int>> parsed;
  for (const std::string& w : weights) parsed.push_back(parse_decimal(w));
  auto parsed_bias = parse_decimal(bias);

  int scale = parsed_bias.second;
  for (auto& [num, s] : parsed) scale = std::max(scale, s);
  auto rescale = [&](std::pair<std::int64_t, int> p) {
    std::int64_t v = p.first;
    for (int i = p.second; i < scale; ++i) v *= 10;
    return v;
  };

  DecisionModel m;
  m.space_ = std::move(space);
  m.kind_ = Kind::LinearThreshold;
  m.scale_ = scale;
  m.bias_ = rescale(parsed_bias);
  for (auto p : parsed) m.weights_.push_back(rescale(p));

  // Exhaustive tie scan: every individual must land strictly off threshold.
  std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1u);
  bool tie = detail::any_completion(full, 0, [&](Individual x) {
    std::int64_t sum = m.bias_;
    for (int f = 0; f < n; ++f) {
      if (x.value(f)) sum += m.weights_[f];
    }
    return sum == 0;
  });
  if (tie) {
    throw ParseError("linear-threshold model has a tie: some individual sums to 0");
  }
  return m;
}

bool DecisionModel::decide(Individual x) const {
  if (kind_ == Kind::TruthTable) {
    return table_[table_index(x, space_.size())];
  }
  std::int64_t sum = bias_;
  for (int f = 0; f < space_.size(); ++f) {
    if (x.value(f)) sum += weights_[f];
  }
  return sum > 0;
}

bool DecisionModel::operator==(const DecisionModel& other) const {
  return space_ == other.space_ && kind_ == other.kind_ && table_ == other.table_ &&
         weights_ == other.weights_ && bias_ == other.bias_ && scale_ == other.scale_;
}

DecisionModel DecisionModel::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
  try {
    FeatureSpace space(j.at("features").get<std::vector<std::string>>());
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "truth-table") {
      std::string bits = j.at("table").get<std::string>();
      std::vector<bool> table;
      table.reserve(bits.size());
      for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("truth table must be a 0/1 string");
        table.push_back(c == '1');
      }
      return truth_table(std::move(space), std::move(table));
    }
    if (kind == "linear-threshold") {
      return linear_threshold(std::move(space),
                              j.at("weights").get<std::vector<std::string>>(),
                              j.at("bias").get<std::string>());
    }
    throw ParseError("unknown model kind: " + kind);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
}

std::string DecisionModel::to_json() const {
  nlohmann::json j;
  j["features"] = space_.names();
  if (kind_ == Kind::TruthTable) {
    j["kind"] = "truth-table";
    std::string bits;
    for (bool b : table_) bits.push_back(b ? '1' : '0');
    j["table"] = bits;
  } else {
    j["kind"] = "linear-threshold";
    std::vector<std::string> ws;
    for (std::int64_t w : weights_) ws.push_back(format_decimal(w, scale_));
    j["weights"] = ws;
    j["bias"] = format_decimal(bias_, scale_);
  }
  return j.dump(2) + "\n";
}

bool exists_flip(const DecisionProcess& m, const PartialAssignment& xp, bool d,
                 const ConstraintSet* k) {
  int n = m.feature_count();
  std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1u);
  return detail::any_completion(full & ~xp.mask, xp.bits, [&](Individual x) {
    if (k && !check_real(*k, x)) return false;
    return m.decide(x) != d;
  });
}

bool equiv_under_bk(const DecisionProcess& m1, const DecisionProcess& m2,
                    const ConstraintSet& k) {
  int n = m1.feature_count();
  if (n != m2.feature_count()) throw DomainError("feature set mismatch");
  std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1u);
  bool differ = detail::any_completion(full, 0, [&](Individual x) {
    return check_real(k, x) && m1.decide(x) != m2.decide(x);
  });
  return !differ;
}

}  // namespace axp
