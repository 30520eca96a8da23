#include "swinv/extalg.hpp"

#include <algorithm>
#include <bit>

namespace swinv {

namespace {

std::vector<int> indices_of(ExtForm::Blade b) {
  std::vector<int> out;
  for (int i = 0; b; ++i, b >>= 1)
    if (b & 1)
      out.push_back(i);
  return out;
}

// Degree first, then lexicographic on the sorted index list.
bool blade_less(ExtForm::Blade a, ExtForm::Blade b) {
  const int da = std::popcount(a), db = std::popcount(b);
  if (da != db)
    return da < db;
  return indices_of(a) < indices_of(b);
}

} // namespace

ExtForm::ExtForm(long b1) : b1_(b1) {
  if (b1 < 0 || b1 > max_rank)
    throw DomainError("exterior algebra rank must be in [0, " +
                      std::to_string(max_rank) + "], got " + std::to_string(b1));
}

ExtForm ExtForm::scalar(long b1, const Integer &value) {
  ExtForm f(b1);
  f.add_term(0, value);
  return f;
}

ExtForm ExtForm::blade(long b1, const std::vector<int> &indices,
                       const Integer &coefficient) {
  ExtForm f(b1);
  std::vector<int> idx = indices;
  int sign = 1;
  // Bubble sort; each swap is one transposition.
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  Blade mask = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= b1)
      throw DomainError("blade index " + std::to_string(idx[i]) +
                        " out of range for b1=" + std::to_string(b1));
    if (i && idx[i] == idx[i - 1])
      return f;
    mask |= Blade{1} << idx[i];
  }
  f.add_term(mask, sign * coefficient);
  return f;
}

void ExtForm::add_term(Blade blade, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(blade, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Integer ExtForm::coefficient(const std::vector<int> &increasing) const {
  Blade mask = 0;
  for (std::size_t i = 0; i < increasing.size(); ++i) {
    if (i && increasing[i] <= increasing[i - 1])
      throw DomainError("coefficient(): indices must be strictly increasing");
    if (increasing[i] < 0 || increasing[i] >= b1_)
      throw DomainError("coefficient(): index out of range");
    mask |= Blade{1} << increasing[i];
  }
  auto it = terms_.find(mask);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> ExtForm::degree() const {
  std::optional<int> d;
  for (const auto &[blade, c] : terms_) {
    const int k = std::popcount(blade);
    if (d && *d != k)
      return std::nullopt;
    d = k;
  }
  return d;
}

ExtForm ExtForm::homogeneous_part(int degree) const {
  ExtForm out(b1_);
  for (const auto &[blade, c] : terms_)
    if (std::popcount(blade) == degree)
      out.terms_.emplace(blade, c);
  return out;
}

Integer ExtForm::top_coefficient() const {
  const Blade top = b1_ == 0 ? 0 : (~Blade{0} >> (64 - b1_));
  auto it = terms_.find(top);
  return it == terms_.end() ? Integer(0) : it->second;
}

ExtForm &ExtForm::operator+=(const ExtForm &other) {
  if (other.b1_ != b1_)
    throw DomainError("exterior forms over different ranks");
  for (const auto &[blade, c] : other.terms_)
    add_term(blade, c);
  return *this;
}

ExtForm &ExtForm::operator-=(const ExtForm &other) {
  if (other.b1_ != b1_)
    throw DomainError("exterior forms over different ranks");
  for (const auto &[blade, c] : other.terms_)
    add_term(blade, -c);
  return *this;
}

ExtForm &ExtForm::operator*=(const Integer &k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[blade, c] : terms_)
    c *= k;
  return *this;
}

std::string ExtForm::str() const {
  if (terms_.empty())
    return "0";
  std::vector<Blade> order;
  for (const auto &[blade, c] : terms_)
    order.push_back(blade);
  std::sort(order.begin(), order.end(), blade_less);
  std::string out;
  for (Blade b : order) {
    if (!out.empty())
      out += ',';
    out += terms_.at(b).str();
    bool first = true;
    for (int i : indices_of(b)) {
      out += first ? "*" : "^";
      out += "a" + std::to_string(i + 1);
      first = false;
    }
  }
  return out;
}

ExtForm ExtForm::parse(long b1, std::string_view text) {
  ExtForm out(b1);
  std::size_t start = 0;
  auto bad = [&](const std::string &why, std::size_t col) {
    return ParseError("bad exterior form '" + std::string(text) + "': " + why,
                      0, col + 1);
  };
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view term = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    std::size_t star = term.find('*');
    // A bare blade "a1^a2" or "-a1" has an implicit unit coefficient.
    std::size_t lead = term.find_first_not_of(' ');
    if (lead != std::string_view::npos && (term[lead] == '+' || term[lead] == '-'))
      ++lead;
    const bool bare = star == std::string_view::npos &&
                      lead != std::string_view::npos && lead < term.size() &&
                      term[lead] == 'a';
    Integer coef;
    try {
      coef = bare ? Integer(lead > 0 && term[lead - 1] == '-' ? -1 : 1)
                  : parse_integer(term.substr(0, star));
    } catch (const ParseError &) {
      throw bad("expected integer coefficient", start);
    }
    std::vector<int> idx;
    if (bare || star != std::string_view::npos) {
      const std::size_t body = bare ? lead : star + 1;
      std::string_view rest = term.substr(body);
      std::size_t pos = 0;
      while (true) {
        std::size_t caret = rest.find('^', pos);
        std::string_view atom = rest.substr(
            pos, caret == std::string_view::npos ? std::string_view::npos
                                                 : caret - pos);
        while (!atom.empty() && atom.front() == ' ')
          atom.remove_prefix(1);
        while (!atom.empty() && atom.back() == ' ')
          atom.remove_suffix(1);
        if (atom.size() < 2 || atom[0] != 'a')
          throw bad("expected a<index>", start + body + pos);
        Integer i;
        try {
          i = parse_integer(atom.substr(1));
        } catch (const ParseError &) {
          throw bad("expected a<index>", start + body + pos);
        }
        if (i < 1 || i > b1)
          throw bad("index out of range 1.." + std::to_string(b1),
                    start + body + pos);
        idx.push_back(static_cast<int>(i) - 1);
        if (caret == std::string_view::npos)
          break;
        pos = caret + 1;
      }
    }
    out += blade(b1, idx, coef);
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

int shuffle_sign(ExtForm::Blade a, ExtForm::Blade b) {
  // Count pairs (p in a, q in b) with p > q.
  int inversions = 0;
  for (ExtForm::Blade rest = b; rest; rest &= rest - 1) {
    const int q = std::countr_zero(rest);
    const ExtForm::Blade above =
        q == 63 ? 0 : (a & (~ExtForm::Blade{0} << (q + 1)));
    inversions += std::popcount(above);
  }
  return inversions % 2 ? -1 : 1;
}

ExtForm wedge(const ExtForm &x, const ExtForm &y) {
  if (x.rank() != y.rank())
    throw DomainError("wedge of forms over different ranks");
  ExtForm out(x.rank());
  for (const auto &[a, ca] : x.terms())
    for (const auto &[b, cb] : y.terms()) {
      if (a & b)
        continue;
      out.add_term(a | b, shuffle_sign(a, b) * ca * cb);
    }
  return out;
}

ExtForm wedge_power(const ExtForm &x, long k) {
  if (k < 0)
    throw DomainError("negative wedge power");
  ExtForm out = ExtForm::scalar(x.rank(), 1);
  for (long i = 0; i < k; ++i)
    out = wedge(out, x);
  return out;
}

ExtForm u_c(const ManifoldTopology &m, const CharacteristicElement &c) {
  ExtForm out(m.b1);
  const auto n = static_cast<std::size_t>(m.b1);
  if (m.triple_cup.size() != n)
    throw DomainError("triple cup tensor has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < m.b2(); ++k)
        s += c.coords()[k] * m.triple_cup[i][j][k];
      if (!is_even(s))
        throw DomainError("u_c not integral: <a" + std::to_string(i + 1) +
                          " u a" + std::to_string(j + 1) + " u c, [X]> = " +
                          s.str() + " is odd");
      out += ExtForm::blade(m.b1, {static_cast<int>(i), static_cast<int>(j)},
                            s / 2);
    }
  return out;
}

Integer wall_crossing_delta(const ManifoldTopology &m,
                            const CharacteristicElement &c,
                            const ExtForm &lambda,
                            const OrientationData &orientation) {
  if (m.bplus != 1)
    throw DomainError("wall crossing needs bplus = 1, got bplus = " +
                      std::to_string(m.bplus));
  if (lambda.rank() != m.b1)
    throw DomainError("lambda lives over rank " +
                      std::to_string(lambda.rank()) + ", expected b1=" +
                      std::to_string(m.b1));
  if (orientation.o1_sign != 1 && orientation.o1_sign != -1)
    throw DomainError("o1_sign must be +1 or -1");
  if (lambda.is_zero())
    return 0;
  const auto deg = lambda.degree();
  if (!deg)
    throw DomainError("lambda is not homogeneous");
  const long r = *deg;
  const Integer w = expected_dim_abelian(m, c);
  if (!is_even(w - r))
    throw DomainError("degree r=" + std::to_string(r) +
                      " has the wrong parity for w_c=" + w.str());
  if (Integer(r) > std::min(Integer(m.b1), w))
    return 0;
  if ((m.b1 - r) % 2 != 0)
    throw std::logic_error("b1 - r odd although r = w_c (mod 2)");
  const long k = (m.b1 - r) / 2;
  const Integer top = wedge(lambda, wedge_power(u_c(m, c), k)).top_coefficient();
  Integer factorial = 1;
  for (long i = 2; i <= k; ++i)
    factorial *= i;
  Integer q, rem;
  boost::multiprecision::divide_qr(top, factorial, q, rem);
  if (rem != 0)
    throw std::logic_error("wall crossing value not integral");
  const int sign = (k % 2 ? -1 : 1) * orientation.o1_sign;
  return sign * q;
}

} // namespace swinv
