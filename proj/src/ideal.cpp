#include "stanley/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "stanley/error.hpp"

namespace stanley {

Exponent Exponent::from_mask(Mask m, int n) {
  Exponent e(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) e[j] = (m >> j) & 1;
  return e;
}

bool Exponent::divides(const Exponent& other) const {
  if (other.size() != size()) return false;
  for (std::size_t j = 0; j < size(); ++j) {
    if (coords_[j] > other.coords_[j]) return false;
  }
  return true;
}

bool Exponent::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::uint32_t c) { return c == 0; });
}

bool Exponent::is_squarefree() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::uint32_t c) { return c <= 1; });
}

std::uint64_t Exponent::degree() const {
  std::uint64_t d = 0;
  for (auto c : coords_) d += c;
  return d;
}

Mask Exponent::support() const {
  if (size() > kMaxSquarefreeVariables) {
    throw LimitError("support masks need n <= 63");
  }
  Mask m = 0;
  for (std::size_t j = 0; j < size(); ++j) {
    if (coords_[j] != 0) m |= Mask{1} << j;
  }
  return m;
}

Mask Exponent::to_mask() const {
  if (!is_squarefree()) throw PreconditionError("exponent is not squarefree");
  return support();
}

std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  out.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool divisible = false;
    for (std::size_t j = 0; j < gens.size() && !divisible; ++j) {
      divisible = j != i && gens[j].divides(gens[i]);
    }
    if (!divisible) out.push_back(gens[i]);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Exponent> gens)
    : n_(n), gens_(std::move(gens)) {
  squarefree_ = std::all_of(gens_.begin(), gens_.end(),
                            [](const Exponent& e) { return e.is_squarefree(); });
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Exponent> gens,
                                             UnitPolicy unit) {
  if (n < 0) throw PreconditionError("negative variable count");
  if (gens.empty()) throw PreconditionError("empty generator list");
  for (const auto& g : gens) {
    if (g.size() != static_cast<std::size_t>(n)) {
      throw PreconditionError("generator length differs from n");
    }
  }
  auto minimal = minimalize(std::move(gens));
  if (unit == UnitPolicy::reject && minimal.front().is_zero()) {
    throw PreconditionError("the unit ideal is not allowed here");
  }
  return MonomialIdeal(n, std::move(minimal));
}

MonomialIdeal MonomialIdeal::from_masks(int n, std::span<const Mask> gens,
                                        UnitPolicy unit) {
  if (n > kMaxSquarefreeVariables) throw LimitError("squarefree n <= 63");
  std::vector<Exponent> exps;
  exps.reserve(gens.size());
  for (Mask m : gens) {
    if (!is_subset(m, full_mask(n))) {
      throw PreconditionError("generator uses a variable beyond n");
    }
    exps.push_back(Exponent::from_mask(m, n));
  }
  return from_generators(n, std::move(exps), unit);
}

MonomialIdeal MonomialIdeal::zero(int n) { return MonomialIdeal(n, {}); }

std::vector<Mask> MonomialIdeal::masks() const {
  std::vector<Mask> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.support());
  return out;
}

Exponent MonomialIdeal::lcm() const {
  Exponent e(static_cast<std::size_t>(n_));
  for (const auto& g : gens_) {
    for (int j = 0; j < n_; ++j) e[j] = std::max(e[j], g[j]);
  }
  return e;
}

namespace {

class CompactParser {
 public:
  CompactParser(std::string_view s, UnitPolicy unit) : s_(s), unit_(unit) {}

  MonomialIdeal parse() {
    skip_ws();
    expect('n');
    skip_ws();
    expect('=');
    skip_ws();
    const auto n = number();
    if (n < 1 || n > 4096) fail("variable count out of range");
    n_ = static_cast<int>(n);
    skip_ws();
    expect(';');
    std::vector<Exponent> gens;
    do {
      skip_ws();
      gens.push_back(monomial());
      skip_ws();
    } while (accept(','));
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return MonomialIdeal::from_generators(n_, std::move(gens), unit_);
  }

 private:
  Exponent monomial() {
    Exponent e(static_cast<std::size_t>(n_));
    if (accept('1')) return e;
    do {
      skip_ws();
      expect('x');
      const auto var = number();
      if (var < 1 || var > static_cast<std::uint64_t>(n_)) {
        fail("variable index out of range");
      }
      std::uint64_t power = 1;
      skip_ws();
      if (accept('^')) {
        skip_ws();
        power = number();
      }
      const auto sum = e[var - 1] + power;
      if (sum > 0xFFFFFFFFull) fail("exponent too large");
      e[var - 1] = static_cast<std::uint32_t>(sum);
      skip_ws();
    } while (accept('*'));
    return e;
  }

  std::uint64_t number() {
    std::uint64_t v = 0;
    const auto* first = s_.data() + pos_;
    const auto* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int n_ = 0;
  UnitPolicy unit_;
};

MonomialIdeal parse_json_ideal(std::string_view text, UnitPolicy unit) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("generators")) {
    throw ParseError("JSON ideal needs fields n and generators");
  }
  if (!j["n"].is_number_integer()) throw ParseError("n must be an integer");
  const auto n = j["n"].get<long long>();
  if (n < 1 || n > 4096) throw ParseError("variable count out of range");
  const auto& gj = j["generators"];
  if (!gj.is_array() || gj.empty()) throw ParseError("empty generator list");
  std::vector<Exponent> gens;
  for (const auto& row : gj) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw ParseError("generator must be an array of n exponents");
    }
    std::vector<std::uint32_t> coords;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0 ||
          v.get<long long>() > 0xFFFFFFFFll) {
        throw ParseError("exponents must be non-negative integers");
      }
      coords.push_back(static_cast<std::uint32_t>(v.get<long long>()));
    }
    gens.emplace_back(std::move(coords));
  }
  return MonomialIdeal::from_generators(static_cast<int>(n), std::move(gens), unit);
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, UnitPolicy unit) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty input");
  try {
    if (text[first] == '{') return parse_json_ideal(text, unit);
    return CompactParser(text, unit).parse();
  } catch (const PreconditionError& e) {
    // Unit ideal and the like surface as malformed input to callers.
    throw ParseError(e.what());
  }
}

std::string to_compact(const MonomialIdeal& ideal) {
  std::ostringstream os;
  os << "n=" << ideal.n() << ";";
  const char* sep = " ";
  for (const auto& g : ideal.generators()) {
    os << sep;
    sep = ", ";
    const char* mul = "";
    bool any = false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] == 0) continue;
      os << mul << 'x' << (j + 1);
      if (g[j] > 1) os << '^' << g[j];
      mul = "*";
      any = true;
    }
    if (!any) os << '1';
  }
  return os.str();
}

std::string to_json(const MonomialIdeal& ideal) {
  nlohmann::json j;
  j["n"] = ideal.n();
  j["generators"] = nlohmann::json::array();
  for (const auto& g : ideal.generators()) j["generators"].push_back(g.coords());
  return j.dump();
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  for (int j = 0; j < ideal.n(); ++j) {
    int users = 0;
    for (const auto& g : gens) users += g[j] != 0;
    if (users > 1) return false;
  }
  return true;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return ideal;
  std::vector<Exponent> gens;
  for (auto g : ideal.generators()) {
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = g[j] != 0;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal::from_generators(ideal.n(), std::move(gens),
                                        UnitPolicy::allow);
}

std::vector<VariableType> classify_variables(const MonomialIdeal& ideal) {
  std::vector<VariableType> out(static_cast<std::size_t>(ideal.n()));
  const auto& gens = ideal.generators();
  for (int j = 0; j < ideal.n(); ++j) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i][j] == 0) continue;
      ++out[j].type;
      out[j].owner = static_cast<int>(i);
    }
    if (out[j].type != 1) out[j].owner = -1;
  }
  return out;
}

}  // namespace stanley
