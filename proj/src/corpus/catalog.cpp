#include <cstdlib>
#include <functional>

#include "envelope/corpus.hpp"
#include "envelope/error.hpp"

namespace envelope {

std::size_t order_cap_from_env() {
  const char* raw = std::getenv("ENVELOPE_ORDER_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultOrderCap;
  char* end = nullptr;
  auto v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return kDefaultOrderCap;
  return static_cast<std::size_t>(v);
}

namespace {

using MulFn = std::function<ElementId(ElementId, ElementId)>;

void require_order(const std::string& what, std::size_t order, std::size_t cap, bool table_built) {
  if (order > cap) {
    throw Error(ErrorCode::OrderCapExceeded, what + " has order " + std::to_string(order) +
                                                 ", above the cap " + std::to_string(cap));
  }
  if (table_built && order > kCatalogTableLimit) {
    throw Error(ErrorCode::OrderCapExceeded,
                what + " has order " + std::to_string(order) + "; table-built groups stop at " +
                    std::to_string(kCatalogTableLimit));
  }
}

GroupPtr from_rule(std::size_t n, const MulFn& mul, std::vector<std::string> labels) {
  FiniteGroup::Table table(n, std::vector<ElementId>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = mul(static_cast<ElementId>(a), static_cast<ElementId>(b));
    }
  }
  return FiniteGroup::from_cayley_table(table, std::move(labels));
}

std::string power(const std::string& gen, std::uint64_t k) {
  if (k == 0) return "";
  if (k == 1) return gen;
  return gen + "^" + std::to_string(k);
}

std::uint64_t param(const std::string& name, const std::map<std::string, std::uint64_t>& ps,
                    const std::string& key) {
  auto it = ps.find(key);
  if (it == ps.end()) {
    throw Error(ErrorCode::InvalidArgument, "catalog group " + name + " needs parameter " + key);
  }
  for (const auto& [k, _] : ps) {
    if (k != key) {
      throw Error(ErrorCode::InvalidArgument,
                  "catalog group " + name + " takes no parameter " + k);
    }
  }
  return it->second;
}

GroupPtr cyclic(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "C_n needs n >= 1");
  require_order("C_" + std::to_string(n), n, cap, true);
  std::vector<std::string> labels;
  for (std::uint64_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "e" : power("r", k));
  return from_rule(n, [n](ElementId a, ElementId b) { return static_cast<ElementId>((a + b) % n); },
                   std::move(labels));
}

// Elements x^a y^e with id e*m + a. Dihedral: y^2 = 1; quaternion: y^2 = x^(m/2).
GroupPtr metacyclic(std::uint64_t m, const std::string& x, const std::string& y,
                    std::uint64_t y_square) {
  std::vector<std::string> labels;
  for (std::uint64_t e = 0; e < 2; ++e) {
    for (std::uint64_t a = 0; a < m; ++a) {
      auto text = power(x, a) + (e ? y : "");
      labels.push_back(text.empty() ? "e" : text);
    }
  }
  auto mul = [m, y_square](ElementId p, ElementId q) {
    std::uint64_t a = p % m, e = p / m, b = q % m, f = q / m;
    std::uint64_t exp = (a + (e ? m - b : b) + (e && f ? y_square : 0)) % m;
    return static_cast<ElementId>((e ^ f) * m + exp);
  };
  return from_rule(2 * m, mul, std::move(labels));
}

GroupPtr dihedral(std::uint64_t n, std::size_t cap) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "D_n needs an even order n >= 2");
  require_order("D_" + std::to_string(n), n, cap, true);
  return metacyclic(n / 2, "r", "s", 0);
}

GroupPtr quaternion(std::uint64_t n, std::size_t cap) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw Error(ErrorCode::InvalidArgument, "Q_n needs an order n = 2^k >= 8");
  }
  require_order("Q_" + std::to_string(n), n, cap, true);
  return metacyclic(n / 2, "x", "y", n / 4);
}

GroupPtr heisenberg(std::uint64_t p, std::size_t cap) {
  if (p != 2 && p != 3 && p != 5 && p != 7) {
    throw Error(ErrorCode::InvalidArgument, "Heis_p needs a prime p <= 7");
  }
  const std::uint64_t n = p * p * p;
  require_order("Heis_" + std::to_string(p), n, cap, true);
  std::vector<std::string> labels;
  for (std::uint64_t id = 0; id < n; ++id) {
    labels.push_back("[" + std::to_string(id / (p * p)) + "," + std::to_string(id / p % p) + "," +
                     std::to_string(id % p) + "]");
  }
  auto mul = [p](ElementId u, ElementId v) {
    std::uint64_t a = u / (p * p), b = u / p % p, c = u % p;
    std::uint64_t a2 = v / (p * p), b2 = v / p % p, c2 = v % p;
    return static_cast<ElementId>(((a + a2) % p) * p * p + ((b + b2) % p) * p +
                                  (c + c2 + a * b2) % p);
  };
  return from_rule(n, mul, std::move(labels));
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string cycle(std::uint64_t from, std::uint64_t to) {
  std::string s = "(";
  for (auto k = from; k <= to; ++k) s += (k == from ? "" : " ") + std::to_string(k);
  return s + ")";
}

GroupPtr symmetric(std::uint64_t n, std::size_t cap) {
  if (n < 1 || n > 6) throw Error(ErrorCode::InvalidArgument, "S_n needs 1 <= n <= 6");
  require_order("S_" + std::to_string(n), factorial(n), cap, false);
  std::vector<std::string> gens;
  if (n >= 2) gens.push_back("(1 2)");
  if (n >= 3) gens.push_back(cycle(1, n));
  return FiniteGroup::from_permutation_generators(n, gens, cap);
}

GroupPtr alternating(std::uint64_t n, std::size_t cap) {
  if (n < 1 || n > 6) throw Error(ErrorCode::InvalidArgument, "A_n needs 1 <= n <= 6");
  require_order("A_" + std::to_string(n), n < 2 ? 1 : factorial(n) / 2, cap, false);
  std::vector<std::string> gens;
  for (std::uint64_t k = 3; k <= n; ++k) gens.push_back("(1 2 " + std::to_string(k) + ")");
  return FiniteGroup::from_permutation_generators(n, gens, cap);
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"C", "D", "Q", "S", "A", "Heis"};
  return names;
}

GroupPtr catalog(const std::string& name, const std::map<std::string, std::uint64_t>& parameters,
                 std::size_t order_cap) {
  if (name == "C") return cyclic(param(name, parameters, "n"), order_cap);
  if (name == "D") return dihedral(param(name, parameters, "n"), order_cap);
  if (name == "Q") return quaternion(param(name, parameters, "n"), order_cap);
  if (name == "S") return symmetric(param(name, parameters, "n"), order_cap);
  if (name == "A") return alternating(param(name, parameters, "n"), order_cap);
  if (name == "Heis") return heisenberg(param(name, parameters, "p"), order_cap);
  throw Error(ErrorCode::UnknownCatalogName, "unknown catalog group \"" + name + "\"");
}

GroupPtr direct_product(const std::vector<GroupPtr>& factors, std::size_t order_cap) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "direct product of no factors");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f->order();
    require_order("direct product", n, order_cap, true);
  }
  const std::size_t k = factors.size();
  auto digits = [&](ElementId id) {
    std::vector<ElementId> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = static_cast<ElementId>(id % factors[i]->order());
      id = static_cast<ElementId>(id / factors[i]->order());
    }
    return d;
  };
  std::vector<std::string> labels;
  for (std::size_t id = 0; id < n; ++id) {
    auto d = digits(static_cast<ElementId>(id));
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + factors[i]->label(d[i]);
    labels.push_back(s + ")");
  }
  auto mul = [&](ElementId a, ElementId b) {
    auto da = digits(a), db = digits(b);
    std::size_t id = 0;
    for (std::size_t i = 0; i < k; ++i) id = id * factors[i]->order() + factors[i]->mul(da[i], db[i]);
    return static_cast<ElementId>(id);
  };
  return from_rule(n, mul, std::move(labels));
}

}  // namespace envelope
