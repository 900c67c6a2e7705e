#include "smalc/quantale.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace smalc {

namespace {

std::string el(int a) { return std::to_string(a); }

}  // namespace

int FiniteQuantale::join_mask(std::uint32_t mask) const {
  int acc = bottom_;
  for (int a = 0; a < n_; ++a)
    if ((mask >> a) & 1u) acc = join(acc, a);
  return acc;
}

int FiniteQuantale::residual_left(int a, int b) const {
  int acc = bottom_;
  for (int c = 0; c < n_; ++c)
    if (leq(mult(a, c), b)) acc = join(acc, c);
  return acc;
}

int FiniteQuantale::residual_right(int b, int a) const {
  int acc = bottom_;
  for (int c = 0; c < n_; ++c)
    if (leq(mult(c, a), b)) acc = join(acc, c);
  return acc;
}

bool FiniteQuantale::is_central_element(int a) const {
  for (int b = 0; b < n_; ++b)
    if (mult(a, b) != mult(b, a)) return false;
  return true;
}

bool FiniteQuantale::is_ssi_element(int a) const {
  for (int b = 0; b < n_; ++b) {
    int aba = mult(mult(a, b), a);
    if (!leq(mult(a, b), aba)) return false;
    if (!leq(mult(b, a), aba)) return false;
  }
  return true;
}

int residual_left(const FiniteQuantale& q, int a, int b) { return q.residual_left(a, b); }
int residual_right(const FiniteQuantale& q, int b, int a) { return q.residual_right(b, a); }

struct QuantaleValidator {
  static QuantaleResult run(int n, std::vector<std::uint8_t> leq, std::vector<int> mult,
                            std::optional<int> unit) {
    QuantaleResult res;
    auto err = [&res](std::string m) { res.errors.push_back(std::move(m)); };
    if (n <= 0 || n > 31) {
      err("size must be between 1 and 31");
      return res;
    }
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (leq.size() != nn || mult.size() != nn) {
      err("table size does not match n*n");
      return res;
    }
    for (int v : mult)
      if (v < 0 || v >= n) {
        err("mult entry out of range: " + el(v));
        return res;
      }
    if (unit && (*unit < 0 || *unit >= n)) {
      err("unit element out of range: " + el(*unit));
      return res;
    }

    FiniteQuantale q;
    q.n_ = n;
    q.leq_ = std::move(leq);
    q.mult_ = std::move(mult);
    q.unit_ = unit;

    // Partial order.
    for (int a = 0; a < n; ++a)
      if (!q.leq(a, a)) err("order not reflexive at " + el(a));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && q.leq(a, b) && q.leq(b, a))
          err("order not antisymmetric at (" + el(a) + "," + el(b) + ")");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (q.leq(a, b) && q.leq(b, c) && !q.leq(a, c))
            err("order not transitive at (" + el(a) + "," + el(b) + "," + el(c) + ")");
    if (!res.errors.empty()) return res;

    // Pairwise joins and a bottom; finiteness then gives all joins and
    // meets.
    q.join_.assign(nn, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int least = -1;
        for (int u = 0; u < n; ++u) {
          if (!q.leq(a, u) || !q.leq(b, u)) continue;
          if (least < 0 || q.leq(u, least)) least = u;
        }
        if (least < 0) {
          err("no upper bound for (" + el(a) + "," + el(b) + ")");
          continue;
        }
        for (int u = 0; u < n; ++u)
          if (q.leq(a, u) && q.leq(b, u) && !q.leq(least, u)) {
            err("no least upper bound for (" + el(a) + "," + el(b) + ")");
            least = -1;
            break;
          }
        q.join_[static_cast<std::size_t>(a * n + b)] = least;
      }
    int bottom = -1;
    for (int a = 0; a < n; ++a) {
      bool below_all = true;
      for (int b = 0; b < n; ++b) below_all = below_all && q.leq(a, b);
      if (below_all) bottom = a;
    }
    if (bottom < 0) err("no bottom element (empty join missing)");
    if (!res.errors.empty()) return res;
    q.bottom_ = bottom;

    int top = -1;
    for (int a = 0; a < n; ++a) {
      bool above_all = true;
      for (int b = 0; b < n; ++b) above_all = above_all && q.leq(b, a);
      if (above_all) top = a;
    }
    // A finite join semilattice has a top (join of everything).
    q.top_ = top >= 0 ? top : q.join_mask((1u << n) - 1);

    q.meet_.assign(nn, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int acc = q.bottom_;
        for (int c = 0; c < n; ++c)
          if (q.leq(c, a) && q.leq(c, b)) acc = q.join(acc, c);
        if (!q.leq(acc, a) || !q.leq(acc, b)) {
          err("meet computation failed at (" + el(a) + "," + el(b) + ")");
          continue;
        }
        q.meet_[static_cast<std::size_t>(a * n + b)] = acc;
      }
    if (!res.errors.empty()) return res;

    // Semigroup and quantale laws.
    for (int a = 0; a < n && res.errors.size() < 8; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (q.mult(q.mult(a, b), c) != q.mult(a, q.mult(b, c)))
            err("associativity fails at (" + el(a) + "," + el(b) + "," + el(c) + ")");
    for (int a = 0; a < n && res.errors.size() < 8; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (q.mult(a, q.join(b, c)) != q.join(q.mult(a, b), q.mult(a, c)))
            err("left distributivity fails at (" + el(a) + ";" + el(b) + "," + el(c) + ")");
          if (q.mult(q.join(b, c), a) != q.join(q.mult(b, a), q.mult(c, a)))
            err("right distributivity fails at (" + el(b) + "," + el(c) + ";" + el(a) + ")");
        }
    // Distributivity over the empty join.
    for (int a = 0; a < n; ++a) {
      if (q.mult(a, q.bottom_) != q.bottom_)
        err("empty-join distributivity fails: " + el(a) + "*bottom != bottom");
      if (q.mult(q.bottom_, a) != q.bottom_)
        err("empty-join distributivity fails: bottom*" + el(a) + " != bottom");
    }
    if (unit)
      for (int a = 0; a < n; ++a) {
        if (q.mult(*unit, a) != a) err("unit fails: e*" + el(a) + " != " + el(a));
        if (q.mult(a, *unit) != a) err("unit fails: " + el(a) + "*e != " + el(a));
      }

    if (res.errors.empty()) res.quantale = std::move(q);
    return res;
  }
};

QuantaleResult FiniteQuantale::validate(int n, std::vector<std::uint8_t> leq,
                                        std::vector<int> mult, std::optional<int> unit) {
  return QuantaleValidator::run(n, std::move(leq), std::move(mult), unit);
}

QuantaleResult validate_quantale(int n, std::vector<std::uint8_t> leq, std::vector<int> mult,
                                 std::optional<int> unit) {
  return QuantaleValidator::run(n, std::move(leq), std::move(mult), unit);
}

std::vector<int> Subquantale::elements() const {
  std::vector<int> out;
  for (int a = 0; a < parent->size(); ++a)
    if (contains(a)) out.push_back(a);
  return out;
}

std::vector<std::string> subquantale_errors(const FiniteQuantale& q, std::uint32_t members) {
  std::vector<std::string> errors;
  auto in = [&](int a) { return ((members >> a) & 1u) != 0; };
  if (!in(q.bottom())) errors.push_back("subquantale misses bottom (the empty join)");
  for (int a = 0; a < q.size(); ++a) {
    if (!in(a)) continue;
    for (int b = 0; b < q.size(); ++b) {
      if (!in(b)) continue;
      if (!in(q.join(a, b)))
        errors.push_back("not join-closed at (" + el(a) + "," + el(b) + ")");
      if (!in(q.mult(a, b)))
        errors.push_back("not product-closed at (" + el(a) + "," + el(b) + ")");
    }
  }
  return errors;
}

Subquantale make_subquantale(const FiniteQuantale& q, std::uint32_t members) {
  auto errors = subquantale_errors(q, members);
  if (!errors.empty()) throw std::invalid_argument("invalid subquantale: " + errors.front());
  return Subquantale{&q, members};
}

Subquantale centre(const FiniteQuantale& q) {
  std::uint32_t mask = 0;
  for (int a = 0; a < q.size(); ++a)
    if (q.is_central_element(a)) mask |= 1u << a;
  return make_subquantale(q, mask);
}

Subquantale ssi_elements(const FiniteQuantale& q) {
  std::uint32_t mask = 0;
  for (int a = 0; a < q.size(); ++a)
    if (q.is_ssi_element(a)) mask |= 1u << a;
  return make_subquantale(q, mask);
}

std::vector<std::string> conucleus_errors(const FiniteQuantale& q, const std::vector<int>& table) {
  std::vector<std::string> errors;
  if (table.size() != static_cast<std::size_t>(q.size())) {
    errors.push_back("conucleus table size mismatch");
    return errors;
  }
  for (int v : table)
    if (v < 0 || v >= q.size()) {
      errors.push_back("conucleus entry out of range: " + el(v));
      return errors;
    }
  auto I = [&](int a) { return table[static_cast<std::size_t>(a)]; };
  for (int a = 0; a < q.size(); ++a) {
    if (!q.leq(I(a), a)) errors.push_back("not deflationary at " + el(a));
    if (I(I(a)) != I(a)) errors.push_back("not idempotent at " + el(a));
  }
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) {
      if (q.leq(a, b) && !q.leq(I(a), I(b)))
        errors.push_back("not monotone at (" + el(a) + "," + el(b) + ")");
      int p = q.mult(I(a), I(b));
      if (I(p) != p) errors.push_back("product law fails at (" + el(a) + "," + el(b) + ")");
    }
  return errors;
}

ConucleusMap make_conucleus(const FiniteQuantale& q, std::vector<int> table) {
  auto errors = conucleus_errors(q, table);
  if (!errors.empty()) throw std::invalid_argument("invalid conucleus: " + errors.front());
  return ConucleusMap{&q, std::move(table)};
}

ConucleusMap conucleus_from_subquantale(const FiniteQuantale& q, const Subquantale& s,
                                        ConucleusFilter filter) {
  if (s.parent != &q) throw std::invalid_argument("subquantale belongs to a different quantale");
  if (filter.unital && !q.unit())
    throw std::invalid_argument("unital filter requires a unital quantale");
  std::vector<int> table(static_cast<std::size_t>(q.size()));
  for (int a = 0; a < q.size(); ++a) {
    int acc = q.bottom();
    for (int e = 0; e < q.size(); ++e) {
      if (!s.contains(e) || !q.leq(e, a)) continue;
      if (filter.unital && !q.leq(e, *q.unit())) continue;
      if (filter.central && !q.is_central_element(e)) continue;
      if (filter.ssi && !q.is_ssi_element(e)) continue;
      acc = q.join(acc, e);
    }
    table[static_cast<std::size_t>(a)] = acc;
  }
  auto errors = conucleus_errors(q, table);
  if (!errors.empty())
    throw std::logic_error("subquantale-derived map is not a conucleus: " + errors.front());
  return ConucleusMap{&q, std::move(table)};
}

Subquantale open_elements(const FiniteQuantale& q, const ConucleusMap& i) {
  if (i.parent != &q) throw std::invalid_argument("conucleus belongs to a different quantale");
  std::uint32_t mask = 0;
  for (int a = 0; a < q.size(); ++a)
    if (i.apply(a) == a) mask |= 1u << a;
  auto errors = subquantale_errors(q, mask);
  if (!errors.empty())
    throw std::logic_error("open elements are not a subquantale: " + errors.front());
  // Unfolding identity: I a = join of the open elements below a.
  for (int a = 0; a < q.size(); ++a) {
    int acc = q.bottom();
    for (int e = 0; e < q.size(); ++e)
      if (((mask >> e) & 1u) && q.leq(e, a)) acc = q.join(acc, e);
    if (acc != i.apply(a))
      throw std::logic_error("conucleus unfolding identity fails at " + el(a));
  }
  return Subquantale{&q, mask};
}

bool conucleus_leq(const ConucleusMap& i1, const ConucleusMap& i2) {
  if (i1.parent != i2.parent)
    throw std::invalid_argument("conuclei live on different quantales");
  const FiniteQuantale& q = *i1.parent;
  for (int a = 0; a < q.size(); ++a)
    if (!q.leq(i1.apply(a), i2.apply(a))) return false;
  return true;
}

ConucleusClass classify_conucleus(const FiniteQuantale& q, const ConucleusMap& i) {
  ConucleusClass c;
  c.is_unital = q.unit().has_value();
  c.is_central = true;
  c.is_ssi = true;
  for (int a = 0; a < q.size(); ++a) {
    int ia = i.apply(a);
    if (c.is_unital && !q.leq(ia, *q.unit())) c.is_unital = false;
    if (!q.is_central_element(ia)) c.is_central = false;
    if (!q.is_ssi_element(ia)) c.is_ssi = false;
  }
  if (c.is_unital && c.is_ssi && !c.is_central)
    throw std::logic_error("unital+ssi conucleus failed to be central");
  return c;
}

bool conucleus_preserves_unit(const FiniteQuantale& q, const ConucleusMap& i) {
  return q.unit() && i.apply(*q.unit()) == *q.unit();
}

std::vector<std::string> homomorphism_errors(const QuantaleHom& f) {
  std::vector<std::string> errors;
  if (!f.src || !f.dst || f.map.size() != static_cast<std::size_t>(f.src->size())) {
    errors.push_back("homomorphism map size mismatch");
    return errors;
  }
  for (int v : f.map)
    if (v < 0 || v >= f.dst->size()) {
      errors.push_back("homomorphism entry out of range");
      return errors;
    }
  const FiniteQuantale& a = *f.src;
  const FiniteQuantale& b = *f.dst;
  if (f.apply(a.bottom()) != b.bottom()) errors.push_back("does not preserve the empty join");
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (f.apply(a.join(x, y)) != b.join(f.apply(x), f.apply(y)))
        errors.push_back("does not preserve join at (" + el(x) + "," + el(y) + ")");
      if (f.apply(a.mult(x, y)) != b.mult(f.apply(x), f.apply(y)))
        errors.push_back("does not preserve product at (" + el(x) + "," + el(y) + ")");
    }
  if (a.unit()) {
    if (!b.unit())
      errors.push_back("source is unital but target is not");
    else if (f.apply(*a.unit()) != *b.unit())
      errors.push_back("does not preserve the unit");
  }
  return errors;
}

std::vector<std::string> homomorphism_errors(const QuantaleHom& f, const ConucleusMap& i1,
                                             const ConucleusMap& i2) {
  auto errors = homomorphism_errors(f);
  if (!errors.empty()) return errors;
  if (i1.parent != f.src || i2.parent != f.dst) {
    errors.push_back("conuclei do not live on the map endpoints");
    return errors;
  }
  for (int a = 0; a < f.src->size(); ++a)
    if (f.apply(i1.apply(a)) != i2.apply(f.apply(a)))
      errors.push_back("conucleus square fails at " + el(a));
  return errors;
}

std::string print_quantale(const FiniteQuantale& q) {
  std::ostringstream out;
  out << "quantale n=" << q.size() << " unital=";
  if (q.unit())
    out << *q.unit();
  else
    out << "none";
  out << '\n';
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b) out << (q.leq(a, b) ? '1' : '0');
    out << '\n';
  }
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b) {
      if (b) out << ' ';
      out << q.mult(a, b);
    }
    out << '\n';
  }
  return out.str();
}

QuantaleResult parse_quantale_text(const std::string& text) {
  std::stringstream in(text);
  return parse_quantale_stream(in);
}

QuantaleResult parse_quantale_stream(std::istream& in) {
  auto fail = [](std::string m) {
    QuantaleResult r;
    r.errors.push_back(std::move(m));
    return r;
  };
  std::string line;
  do {
    if (!std::getline(in, line)) return fail("missing quantale header");
  } while (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#');

  int n = 0;
  std::string unital;
  {
    std::stringstream hs(line);
    std::string kw, nfield, ufield;
    hs >> kw >> nfield >> ufield;
    if (kw != "quantale" || nfield.rfind("n=", 0) != 0 || ufield.rfind("unital=", 0) != 0)
      return fail("malformed quantale header: " + line);
    try {
      n = std::stoi(nfield.substr(2));
    } catch (...) {
      return fail("malformed size in header");
    }
    unital = ufield.substr(7);
  }
  if (n <= 0 || n > 31) return fail("size out of range");
  std::optional<int> unit;
  if (unital != "none") {
    try {
      unit = std::stoi(unital);
    } catch (...) {
      return fail("malformed unital field");
    }
  }
  std::vector<std::uint8_t> leq;
  leq.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (!std::getline(in, line)) return fail("missing leq row " + std::to_string(a));
    std::string bits;
    for (char c : line)
      if (c == '0' || c == '1') bits += c;
    if (static_cast<int>(bits.size()) != n) return fail("bad leq row " + std::to_string(a));
    for (char c : bits) leq.push_back(c == '1' ? 1 : 0);
  }
  std::vector<int> mult;
  mult.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (!std::getline(in, line)) return fail("missing mult row " + std::to_string(a));
    std::stringstream ls(line);
    for (int b = 0; b < n; ++b) {
      int v;
      if (!(ls >> v)) return fail("bad mult row " + std::to_string(a));
      mult.push_back(v);
    }
  }
  return validate_quantale(n, std::move(leq), std::move(mult), unit);
}

QuantaleResult load_quantale_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    QuantaleResult r;
    r.errors.push_back("cannot open quantale file: " + path);
    return r;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_quantale_text(ss.str());
}

std::string print_conucleus(const ConucleusMap& i) {
  std::string out = "conucleus\n";
  for (std::size_t a = 0; a < i.table.size(); ++a) {
    if (a) out += ' ';
    out += std::to_string(i.table[a]);
  }
  out += '\n';
  return out;
}

}  // namespace smalc
