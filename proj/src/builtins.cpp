#include "gds/builtins.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gds/errors.hpp"
#include "gds/subgroup.hpp"

namespace gds
{

namespace
{

using Poly = std::vector<unsigned>; // coefficients, lowest degree first

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Poly poly_mod(Poly a, Poly const &m, unsigned p)
{
  trim(a);
  auto lead_inv = 1u;
  while ((m.back() * lead_inv) % p != 1)
    ++lead_inv;
  while (a.size() >= m.size()) {
    auto shift = a.size() - m.size();
    auto factor = (a.back() * lead_inv) % p;
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - factor * m[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly digits(unsigned value, unsigned p, unsigned k)
{
  Poly d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

unsigned from_digits(Poly const &d, unsigned p)
{
  unsigned value = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it)
    value = value * p + *it;
  return value;
}

bool irreducible(Poly const &f, unsigned p)
{
  auto k = f.size() - 1;
  // no monic factor of degree 1..k/2
  for (unsigned deg = 1; deg <= k / 2; ++deg) {
    unsigned count = 1;
    for (unsigned i = 0; i < deg; ++i)
      count *= p;
    for (unsigned low = 0; low < count; ++low) {
      auto g = digits(low, p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

struct LinearAction
{
  FiniteField const &field;
  unsigned dim;
  bool projective;
  std::vector<std::vector<unsigned>> points;
  std::map<std::vector<unsigned>, unsigned> index;

  LinearAction(FiniteField const &f, unsigned n, bool proj) : field(f), dim(n), projective(proj)
  {
    unsigned total = 1;
    for (unsigned i = 0; i < n; ++i)
      total *= f.order();
    for (unsigned code = 1; code < total; ++code) {
      std::vector<unsigned> v(n);
      auto c = code;
      // most significant coordinate first so the ordering is natural
      for (unsigned i = n; i-- > 0;) {
        v[i] = c % f.order();
        c /= f.order();
      }
      if (projective && normalize(v) != v)
        continue;
      index[v] = static_cast<unsigned>(points.size());
      points.push_back(v);
    }
  }

  std::vector<unsigned> normalize(std::vector<unsigned> v) const
  {
    auto lead = std::find_if(v.begin(), v.end(), [](unsigned x) { return x != 0; });
    auto scale = field.inv(*lead);
    for (auto &x : v)
      x = field.mul(x, scale);
    return v;
  }

  // row vector times matrix
  Permutation act(std::vector<std::vector<unsigned>> const &m) const
  {
    std::vector<Point> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<unsigned> w(dim, 0);
      for (unsigned c = 0; c < dim; ++c)
        for (unsigned r = 0; r < dim; ++r)
          w[c] = field.add(w[c], field.mul(points[i][r], m[r][c]));
      if (projective)
        w = normalize(w);
      images[i] = static_cast<Point>(index.at(w));
    }
    return Permutation(std::move(images));
  }

  std::vector<std::vector<unsigned>> identity() const
  {
    std::vector<std::vector<unsigned>> m(dim, std::vector<unsigned>(dim, 0));
    for (unsigned i = 0; i < dim; ++i)
      m[i][i] = 1;
    return m;
  }

  /// Elementary transvections I + t E_ij for t in an additive basis; they generate SL(n, q).
  std::vector<Permutation> transvections() const
  {
    std::vector<Permutation> gens;
    for (unsigned i = 0; i < dim; ++i)
      for (unsigned j = 0; j < dim; ++j) {
        if (i == j)
          continue;
        for (auto t : field.basis()) {
          auto m = identity();
          m[i][j] = t;
          gens.push_back(act(m));
        }
      }
    return gens;
  }
};

void require(bool ok, std::string const &message)
{
  if (!ok)
    throw InputError(message);
}

bool is_prime_power(unsigned q)
{
  if (q < 2)
    return false;
  auto primes = prime_divisors(q);
  return primes.size() == 1;
}

unsigned parse_unsigned(std::string const &text, std::string const &spec)
{
  try {
    std::size_t used = 0;
    auto value = std::stoul(text, &used);
    if (used != text.size())
      throw std::invalid_argument(text);
    return static_cast<unsigned>(value);
  } catch (std::exception const &) {
    throw InputError("bad numeric parameter \"" + text + "\" in builtin spec \"" + spec + "\"");
  }
}

std::vector<std::string> split(std::string const &s, char sep)
{
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    parts.push_back(item);
  return parts;
}

} // namespace

FiniteField::FiniteField(unsigned q) : q_(q)
{
  if (!is_prime_power(q) || q > 1024)
    throw DomainError("GF(" + std::to_string(q) + ") requires a prime power q <= 1024");
  p_ = static_cast<unsigned>(prime_divisors(q)[0]);
  k_ = 0;
  for (auto n = q; n > 1; n /= p_)
    ++k_;

  Poly modulus;
  if (k_ > 1) {
    unsigned count = q;
    for (unsigned low = 0; low < count; ++low) {
      auto f = digits(low, p_, k_);
      f.push_back(1);
      if (f[0] != 0 && irreducible(f, p_)) {
        modulus = f;
        break;
      }
    }
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a, p_, k_);
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b, p_, k_);
      Poly sum(k_);
      for (unsigned i = 0; i < k_; ++i)
        sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = from_digits(sum, p_);

      Poly prod(2 * k_, 0);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      if (k_ > 1)
        prod = poly_mod(prod, modulus, p_);
      else
        trim(prod);
      prod.resize(k_, 0);
      mul_[a * q + b] = from_digits(prod, p_);
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0)
        neg_[a] = b;
      if (mul_[a * q + b] == 1)
        inv_[a] = b;
    }
  }
  for (unsigned a = 1; a < q; ++a) {
    unsigned order = 1;
    for (auto x = a; x != 1; x = mul(x, a))
      ++order;
    if (order == q - 1) {
      primitive_ = a;
      break;
    }
  }
}

std::vector<unsigned> FiniteField::basis() const
{
  std::vector<unsigned> b;
  unsigned power = 1;
  for (unsigned i = 0; i < k_; ++i) {
    b.push_back(power);
    power *= p_;
  }
  return b;
}

PermutationGroup cyclic_group(unsigned n)
{
  require(n >= 1, "cyclic group needs n >= 1");
  std::vector<Permutation> gens;
  if (n > 1) {
    std::vector<Point> images(n);
    for (unsigned i = 0; i < n; ++i)
      images[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(images));
  }
  return PermutationGroup("C" + std::to_string(n), n, gens);
}

PermutationGroup dihedral_group(unsigned n)
{
  require(n >= 2, "dihedral group needs n >= 2");
  if (n == 2) {
    return PermutationGroup("V4", 4,
                            {Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                             Permutation::from_cycles(4, {{1, 3}, {2, 4}})});
  }
  std::vector<Point> rotation(n), reflection(n);
  for (unsigned i = 0; i < n; ++i) {
    rotation[i] = static_cast<Point>((i + 1) % n);
    reflection[i] = static_cast<Point>((n - i) % n);
  }
  return PermutationGroup("D" + std::to_string(2 * n), n,
                          {Permutation(std::move(rotation)), Permutation(std::move(reflection))});
}

PermutationGroup symmetric_group(unsigned n)
{
  require(n >= 1 && n <= 6, "symmetric group supported for 1 <= n <= 6");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> cycle(n);
    for (unsigned i = 0; i < n; ++i)
      cycle[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(cycle));
    gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
  }
  return PermutationGroup("S" + std::to_string(n), n, gens);
}

PermutationGroup alternating_group(unsigned n)
{
  require(n >= 1 && n <= 6, "alternating group supported for 1 <= n <= 6");
  std::vector<Permutation> gens;
  // 3-cycles (1 2 k) generate A_n
  for (unsigned k = 3; k <= n; ++k)
    gens.push_back(Permutation::from_cycles(n, {{1, 2, static_cast<int>(k)}}));
  return PermutationGroup("A" + std::to_string(n), n, gens);
}

PermutationGroup regular_representation(std::string name,
                                        unsigned order,
                                        std::function<unsigned(unsigned, unsigned)> const &multiply,
                                        std::vector<unsigned> const &generators)
{
  std::vector<Permutation> gens;
  for (auto g : generators) {
    std::vector<Point> images(order);
    for (unsigned x = 0; x < order; ++x)
      images[x] = static_cast<Point>(multiply(x, g));
    gens.emplace_back(std::move(images));
  }
  auto group = PermutationGroup(std::move(name), order, gens);
  if (group.order() != order)
    throw DomainError("regular representation generators do not generate all " +
                      std::to_string(order) + " elements");
  return group;
}

PermutationGroup dicyclic_group(unsigned n)
{
  require(n >= 2, "dicyclic group needs n >= 2");
  auto m = 2 * n; // order of the cyclic part
  auto multiply = [m, n](unsigned x, unsigned y) {
    unsigned i = x % m, j = x / m, k = y % m, l = y / m;
    unsigned exp = j == 0 ? (i + k) % m : (i + m - k) % m;
    unsigned t = j ^ l;
    if (j == 1 && l == 1)
      exp = (exp + n) % m;
    return exp + m * t;
  };
  bool two_power = (n & (n - 1)) == 0;
  auto name = two_power ? "Q" + std::to_string(4 * n) : "Dic" + std::to_string(n);
  return regular_representation(name, 4 * n, multiply, {1, m});
}

PermutationGroup metacyclic_group(unsigned m, unsigned n, unsigned r)
{
  require(m >= 2 && n >= 1, "metacyclic group needs m >= 2, n >= 1");
  unsigned long long power = 1;
  for (unsigned i = 0; i < n; ++i)
    power = power * r % m;
  require(power == 1 % m, "metacyclic group needs r^n = 1 mod m");

  std::vector<unsigned> r_powers(n);
  r_powers[0] = 1 % m;
  for (unsigned j = 1; j < n; ++j)
    r_powers[j] = static_cast<unsigned>(static_cast<unsigned long long>(r_powers[j - 1]) * r % m);

  auto multiply = [m, n, r_powers](unsigned x, unsigned y) {
    unsigned i = x % m, j = x / m, k = y % m, l = y / m;
    auto a = static_cast<unsigned>((i + static_cast<unsigned long long>(k) * r_powers[j]) % m);
    return a + m * ((j + l) % n);
  };
  std::vector<unsigned> gens{1};
  if (n > 1)
    gens.push_back(m);
  auto name = "C" + std::to_string(m) + ":C" + std::to_string(n) + "[" + std::to_string(r) + "]";
  return regular_representation(name, m * n, multiply, gens);
}

PermutationGroup extraspecial_27(unsigned exponent)
{
  if (exponent == 9) {
    auto g = metacyclic_group(9, 3, 4);
    g.rename("ES27_exp9");
    return g;
  }
  require(exponent == 3, "extraspecial group of order 27 has exponent 3 or 9");
  // Heisenberg group: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
  auto multiply = [](unsigned x, unsigned y) {
    unsigned a = x % 3, b = (x / 3) % 3, c = x / 9;
    unsigned a2 = y % 3, b2 = (y / 3) % 3, c2 = y / 9;
    return (a + a2) % 3 + 3 * ((b + b2) % 3) + 9 * ((c + c2 + a * b2) % 3);
  };
  return regular_representation("ES27_exp3", 27, multiply, {1, 3});
}

PermutationGroup sl2(unsigned q)
{
  require(is_prime_power(q) && q <= 13, "SL(2,q) supported for prime powers q <= 13");
  FiniteField f(q);
  LinearAction action(f, 2, false);
  return PermutationGroup("SL(2," + std::to_string(q) + ")", action.points.size(),
                          action.transvections());
}

PermutationGroup psl2(unsigned q)
{
  require(is_prime_power(q) && q <= 13, "PSL(2,q) supported for prime powers q <= 13");
  FiniteField f(q);
  LinearAction action(f, 2, true);
  return PermutationGroup("PSL(2," + std::to_string(q) + ")", action.points.size(),
                          action.transvections());
}

PermutationGroup pgl2(unsigned q)
{
  require(is_prime_power(q) && q <= 13, "PGL(2,q) supported for prime powers q <= 13");
  FiniteField f(q);
  LinearAction action(f, 2, true);
  auto gens = action.transvections();
  auto diag = action.identity();
  diag[0][0] = f.primitive_element();
  gens.push_back(action.act(diag));
  return PermutationGroup("PGL(2," + std::to_string(q) + ")", action.points.size(), gens);
}

PermutationGroup psl3(unsigned q)
{
  require(is_prime_power(q) && q <= 4, "PSL(3,q) supported for prime powers q <= 4");
  FiniteField f(q);
  LinearAction action(f, 3, true);
  return PermutationGroup("PSL(3," + std::to_string(q) + ")", action.points.size(),
                          action.transvections());
}

PermutationGroup builtin_group(std::string const &spec, GroupOptions const &options)
{
  auto colon = spec.find(':');
  auto kind = spec.substr(0, colon);
  auto rest = colon == std::string::npos ? std::string() : spec.substr(colon + 1);

  if (kind == "product") {
    auto comma = rest.find(',');
    require(comma != std::string::npos, "product spec needs two factors: \"" + spec + "\"");
    auto left = builtin_group(rest.substr(0, comma), options);
    auto right = builtin_group(rest.substr(comma + 1), options);
    return direct_product(left, right, options);
  }

  auto args = split(rest, ':');
  auto arg = [&](std::size_t i) {
    require(i < args.size(), "missing parameter in builtin spec \"" + spec + "\"");
    return parse_unsigned(args[i], spec);
  };

  if (kind == "cyclic")
    return cyclic_group(arg(0));
  if (kind == "dihedral")
    return dihedral_group(arg(0));
  if (kind == "symmetric")
    return symmetric_group(arg(0));
  if (kind == "alternating")
    return alternating_group(arg(0));
  if (kind == "quaternion") {
    auto order = args.empty() ? 8u : arg(0);
    require(order >= 8 && (order & (order - 1)) == 0, "quaternion order must be a power of 2 >= 8");
    return dicyclic_group(order / 4);
  }
  if (kind == "dicyclic")
    return dicyclic_group(arg(0));
  if (kind == "metacyclic")
    return metacyclic_group(arg(0), arg(1), arg(2));
  if (kind == "extraspecial") {
    require(arg(0) == 27, "only extraspecial groups of order 27 are built in");
    return extraspecial_27(arg(1));
  }
  if (kind == "sl2")
    return sl2(arg(0));
  if (kind == "psl2")
    return psl2(arg(0));
  if (kind == "pgl2")
    return pgl2(arg(0));
  if (kind == "psl3")
    return psl3(arg(0));
  throw InputError("unknown builtin group \"" + spec + "\"");
}

} // namespace gds
