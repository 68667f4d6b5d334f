#include "semifield/census.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "semifield/errors.hpp"

namespace semifield {

namespace {

using Table = std::vector<std::vector<int>>;

// Group tables on {1, .., m} with identity 1, listed up to isomorphism for
// m <= 4: trivial, Z2, Z3, Z4, Klein four-group.
std::vector<Table> groupsOfOrder(int m) {
  auto cyclic = [](int m) {
    Table t(m + 1, std::vector<int>(m + 1, 0));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) t[i][j] = (i - 1 + j - 1) % m + 1;
    return t;
  };
  if (m <= 3) return {cyclic(m)};
  if (m == 4) {
    Table klein(5, std::vector<int>(5, 0));
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) klein[i][j] = (((i - 1) ^ (j - 1)) & 3) + 1;
    return {cyclic(4), klein};
  }
  throw DomainError("groupsOfOrder: only orders <= 4 supported");
}

bool semifieldTablesValid(int n, const Table& add, const Table& mul) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) return false;
      for (int c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]]) return false;
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) return false;
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]) return false;
      }
    }
  return true;
}

std::string tablesKey(int n, const Table& add, const Table& mul) {
  std::ostringstream out;
  for (const Table* t : {&add, &mul})
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out << (*t)[a][b] << ",";
  return out.str();
}

// Minimal key over all relabelings fixing 0 and 1 (semifield isomorphisms
// preserve both neutrals).
std::string canonicalTablesKey(int n, const Table& add, const Table& mul) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::string best;
  std::vector<int> rest(perm.begin() + 2, perm.end());
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> p(n);
    p[0] = 0;
    p[1] = 1;
    for (int i = 0; i < n - 2; ++i) p[i + 2] = rest[i];
    Table addR(n, std::vector<int>(n)), mulR(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        addR[p[a]][p[b]] = p[add[a][b]];
        mulR[p[a]][p[b]] = p[mul[a][b]];
      }
    std::string key = tablesKey(n, addR, mulR);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

bool isFieldTable(int n, const Table& add) {
  for (int a = 0; a < n; ++a) {
    bool hasNeg = false;
    for (int b = 0; b < n; ++b)
      if (add[a][b] == 0) hasNeg = true;
    if (!hasNeg) return false;
  }
  return true;
}

}  // namespace

std::vector<CensusClass> finiteCensus(int maxOrder) {
  if (maxOrder < 2) throw DomainError("finiteCensus: maxOrder must be >= 2");
  if (maxOrder > 5) throw DomainError("finiteCensus: refused, maxOrder capped at 5");

  std::vector<CensusClass> classes;
  for (int n = 2; n <= maxOrder; ++n) {
    std::map<std::string, CensusClass> found;  // canonical key -> class
    for (const Table& group : groupsOfOrder(n - 1)) {
      // Full multiplication table: group shifted onto {1..n-1}, zero absorbing.
      Table mul(n, std::vector<int>(n, 0));
      for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) mul[a][b] = group[a][b];
      std::vector<int> inv(n, 0);
      for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
          if (mul[a][b] == 1) inv[a] = b;

      // Addition is determined by f(x) = 1 + x; f(0) = 1 is forced.
      std::vector<int> f(n, 1);
      long total = 1;
      for (int i = 1; i < n; ++i) total *= n;
      for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 1; i < n; ++i) {
          f[i] = static_cast<int>(c % n);
          c /= n;
        }
        Table add(n, std::vector<int>(n, 0));
        for (int b = 0; b < n; ++b) add[0][b] = add[b][0] = b;
        for (int a = 1; a < n; ++a)
          for (int b = 1; b < n; ++b) add[a][b] = mul[a][f[mul[inv[a]][b]]];
        if (!semifieldTablesValid(n, add, mul)) continue;
        std::string key = canonicalTablesKey(n, add, mul);
        if (found.count(key)) continue;
        CensusClass cls;
        cls.order = n;
        cls.addTable = add;
        cls.mulTable = mul;
        cls.canonicalKey = key;
        found.emplace(std::move(key), std::move(cls));
      }
    }

    // Name and order the classes: fields first, then the Boolean semifield,
    // then anything unrecognized.
    std::vector<CensusClass> ordered;
    for (auto& [key, cls] : found) ordered.push_back(std::move(cls));
    std::stable_sort(ordered.begin(), ordered.end(),
                     [n](const CensusClass& a, const CensusClass& b) {
                       auto rank = [n](const CensusClass& c) {
                         if (isFieldTable(n, c.addTable)) return 0;
                         if (c.addTable[1][1] == 1) return 1;
                         return 2;
                       };
                       if (rank(a) != rank(b)) return rank(a) < rank(b);
                       return a.canonicalKey < b.canonicalKey;
                     });
    int anon = 0;
    for (auto& cls : ordered) {
      if (isFieldTable(n, cls.addTable))
        cls.name = "F_" + std::to_string(n);
      else if (cls.addTable[1][1] == 1 && n == 2)
        cls.name = "B";
      else
        cls.name = "S" + std::to_string(n) + "#" + std::to_string(++anon);
      classes.push_back(std::move(cls));
    }
  }
  return classes;
}

std::shared_ptr<Semifield> tableSemifield(const CensusClass& c) {
  auto S = std::make_shared<Semifield>();
  const std::string id = "table:" + std::to_string(c.order) + ":" + c.name;
  const int n = c.order;
  auto elem = [id](int i) { return makeElement(id, i, std::to_string(i)); };
  auto add = c.addTable;
  auto mul = c.mulTable;
  S->id = id;
  S->zero = elem(0);
  S->one = elem(1);
  S->add = [elem, add](const Element& a, const Element& b) {
    return elem(add[payloadAs<int>(a)][payloadAs<int>(b)]);
  };
  S->mul = [elem, mul](const Element& a, const Element& b) {
    return elem(mul[payloadAs<int>(a)][payloadAs<int>(b)]);
  };
  S->inv = [elem, mul, n](const Element& a) {
    int i = payloadAs<int>(a);
    if (i == 0) throw DomainError("inv: zero has no inverse");
    for (int b = 1; b < n; ++b)
      if (mul[i][b] == 1) return elem(b);
    throw DomainError("inv: table has no inverse");
  };
  S->eq = [](const Element& a, const Element& b) { return a.key == b.key; };
  S->sample = [elem, n](Rng& rng) { return elem(static_cast<int>(below(rng, n))); };
  std::vector<Element> carrier;
  for (int i = 0; i < n; ++i) carrier.push_back(elem(i));
  S->carrier = std::move(carrier);
  S->show = [](const Element& e) { return e.key; };
  S->strictClaim = !isFieldTable(c.order, c.addTable);
  S->cancellativeClaim = isFieldTable(c.order, c.addTable);
  return S;
}

}  // namespace semifield
