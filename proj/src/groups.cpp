#include "haarforge/groups.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace haarforge {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> rows(order_, std::vector<Element>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  return rows;
}

Element FiniteGroup::power(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = identity();
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

FiniteGroup validate_table(const std::vector<std::vector<Element>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupAxiomError("closure: empty table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw GroupAxiomError("closure: row " + std::to_string(a) + " has " +
                            std::to_string(table[a].size()) + " entries, expected " +
                            std::to_string(n));
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n)
        throw GroupAxiomError("closure: product " + pair_str(a, b) + " = " +
                              std::to_string(table[a][b]) + " is out of range");
  }
  for (std::size_t x = 0; x < n; ++x)
    if (table[0][x] != x || table[x][0] != x)
      throw GroupAxiomError("identity: element 0 is not a two-sided identity at " +
                            std::to_string(x));

  FiniteGroup g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    std::copy(table[a].begin(), table[a].end(), g.table_.begin() + a * n);

  g.inv_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const auto row = g.table_.begin() + x * n;
    auto it = std::find(row, row + n, 0u);
    if (it == row + n)
      throw GroupAxiomError("inverse: element " + std::to_string(x) + " has no right inverse");
    const std::size_t y = it - row;
    if (g.table_[y * n + x] != 0)
      throw GroupAxiomError("inverse: right inverse " + std::to_string(y) + " of " +
                            std::to_string(x) + " is not a left inverse");
    g.inv_[x] = y;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = g.table_[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (g.table_[ab * n + c] != g.table_[a * n + g.table_[b * n + c]])
          throw GroupAxiomError("associativity: fails for (" + std::to_string(a) + ", " +
                                std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  return g;
}

ElementSubset::ElementSubset(const FiniteGroup& group, std::vector<Element> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("subset contains duplicate elements");
  if (!members_.empty() && members_.back() >= group.order())
    throw std::invalid_argument("subset element " + std::to_string(members_.back()) +
                                " is not in a group of order " + std::to_string(group.order()));
}

bool ElementSubset::contains(Element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ElementSubset::inverse_closed(const FiniteGroup& group) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element x) { return contains(group.inv(x)); });
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return validate_table(t, "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh);
  return validate_table(t, g.name() + "x" + h.name());
}

FiniteGroup generalized_dihedral(const FiniteGroup& a) {
  if (!is_abelian(a))
    throw std::invalid_argument("generalized_dihedral: base group " + a.name() +
                                " is not abelian");
  // (x, e) is stored at index 2x + e; (x, e)(y, f) = (x * y^{(-1)^e}, e + f).
  const std::size_t na = a.order(), n = 2 * na;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Element x = p / 2, y = q / 2;
      const unsigned e = p % 2, f = q % 2;
      const Element twisted = e ? a.inv(y) : y;
      t[p][q] = 2 * a.mul(x, twisted) + ((e + f) % 2);
    }
  return validate_table(t, "Dih(" + a.name() + ")");
}

FiniteGroup semidirect_cyclic(std::size_t m, std::size_t k, long long r) {
  if (m == 0 || k == 0) throw std::invalid_argument("semidirect_cyclic: m and k must be positive");
  const long long mm = static_cast<long long>(m);
  const long long rr = mod(r, mm);
  if (std::gcd(rr, mm) != 1 && mm != 1)
    throw std::invalid_argument("semidirect_cyclic: r must be a unit mod m");
  // rpow[j] = r^j mod m; the action has to close up after k steps.
  std::vector<long long> rpow(k + 1, 1 % mm);
  for (std::size_t j = 1; j <= k; ++j) rpow[j] = (rpow[j - 1] * rr) % mm;
  if (rpow[k] != 1 % mm)
    throw std::invalid_argument("semidirect_cyclic: r^k is not 1 mod m");
  // (t, j) is stored at index j*m + t; (t, j)(t', j') = (t + r^j t', j + j').
  const std::size_t n = m * k;
  std::vector<std::vector<Element>> tab(n, std::vector<Element>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t t1 = p % m, j1 = p / m, t2 = q % m, j2 = q / m;
      const std::size_t t = (t1 + rpow[j1] * t2) % m;
      tab[p][q] = ((j1 + j2) % k) * m + t;
    }
  return validate_table(tab, "Z" + std::to_string(m) + ":" + std::to_string(rr) + "Z" +
                                 std::to_string(k));
}

bool is_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<std::size_t> element_order_profile(const FiniteGroup& g) {
  std::vector<std::size_t> orders(g.order());
  for (Element a = 0; a < g.order(); ++a) orders[a] = g.element_order(a);
  std::sort(orders.begin(), orders.end());
  return orders;
}

namespace {

// Elements of the subgroup generated by gens, by closure under right
// multiplication.
std::vector<char> span(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> queue{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Element s : gens) {
      const Element y = g.mul(queue[i], s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  return in;
}

}  // namespace

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  auto in = span(g, gens);
  for (Element x = 0; x < g.order(); ++x)
    if (!in[x]) {
      gens.push_back(x);
      in = span(g, gens);
    }
  return gens;
}

std::vector<std::vector<Element>> group_automorphisms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto gens = generating_set(g);
  std::vector<std::size_t> orders(n);
  for (Element a = 0; a < n; ++a) orders[a] = g.element_order(a);

  std::vector<std::vector<Element>> result;
  std::vector<Element> images(gens.size());

  // Extends a generator assignment to the whole group along a spanning tree
  // and checks it is a bijective homomorphism.
  auto try_extend = [&]() {
    constexpr Element unset = ~Element{0};
    std::vector<Element> map(n, unset);
    map[g.identity()] = g.identity();
    std::vector<Element> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Element x = queue[i], y = g.mul(x, gens[j]);
        const Element img = g.mul(map[x], images[j]);
        if (map[y] == unset) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return;
        }
      }
    std::vector<char> hit(n, 0);
    for (Element x = 0; x < n; ++x) {
      if (hit[map[x]]) return;
      hit[map[x]] = 1;
    }
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (map[g.mul(a, b)] != g.mul(map[a], map[b])) return;
    result.push_back(std::move(map));
  };

  std::function<void(std::size_t)> assign = [&](std::size_t j) {
    if (j == gens.size()) {
      try_extend();
      return;
    }
    for (Element y = 0; y < n; ++y)
      if (orders[y] == orders[gens[j]]) {
        images[j] = y;
        assign(j + 1);
      }
  };
  assign(0);
  std::sort(result.begin(), result.end());
  return result;
}

CatalogError::CatalogError(const std::string& file, std::size_t line, const std::string& what)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
      file_(file),
      line_(line) {}

FiniteGroup parse_group(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw CatalogError(source, lineno, "missing name line");
  std::string name;
  {
    std::istringstream ss(line);
    std::string extra;
    ss >> name;
    if (ss >> extra) throw CatalogError(source, lineno, "name must be a single token");
  }
  if (!next_line()) throw CatalogError(source, lineno, "missing order line");
  std::size_t n = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n) || n == 0) throw CatalogError(source, lineno, "order must be a positive integer");
    if (ss >> extra) throw CatalogError(source, lineno, "trailing tokens after order");
  }
  std::vector<std::vector<Element>> table(n);
  for (std::size_t row = 0; row < n; ++row) {
    if (!next_line())
      throw CatalogError(source, lineno, "expected " + std::to_string(n) + " table rows, got " +
                                             std::to_string(row));
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || tok[0] == '-')
        throw CatalogError(source, lineno, "bad table entry '" + tok + "'");
      table[row].push_back(static_cast<Element>(v));
    }
    if (table[row].size() != n)
      throw CatalogError(source, lineno, "row has " + std::to_string(table[row].size()) +
                                             " entries, expected " + std::to_string(n));
  }
  if (next_line()) throw CatalogError(source, lineno, "trailing content after table");
  try {
    return validate_table(table, name);
  } catch (const GroupAxiomError& e) {
    throw CatalogError(source, lineno, e.what());
  }
}

FiniteGroup read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError(path.string(), 0, "cannot open file");
  return parse_group(in, path.string());
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << g.name() << '\n' << g.order() << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
}

std::vector<FiniteGroup> load_catalog(const std::filesystem::path& dir) {
  if (std::filesystem::is_regular_file(dir)) return {read_group_file(dir)};
  if (!std::filesystem::is_directory(dir))
    throw CatalogError(dir.string(), 0, "catalog path is neither a file nor a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<FiniteGroup> groups;
  for (const auto& f : files) groups.push_back(read_group_file(f));
  return groups;
}

}  // namespace haarforge
