#include "cck/seeds.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "cck/error.hpp"

namespace cck {

namespace {

int positive_part(int v) { return v > 0 ? v : 0; }

}  // namespace

ExtendedMatrix::ExtendedMatrix(std::size_t n, std::size_t ell) : n_(n), ell_(ell), entries_((n + ell) * n, 0) {}

std::size_t ExtendedMatrix::index(std::size_t i, std::size_t j) const {
  if (i == 0 || i > n_ + ell_ || j == 0 || j > n_) throw DomainError("matrix index out of range");
  return (i - 1) * n_ + (j - 1);
}

ExtendedMatrix ExtendedMatrix::principal(const std::vector<std::vector<int>>& exchange) {
  const std::size_t n = exchange.size();
  ExtendedMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (exchange[i].size() != n) throw DomainError("exchange matrix is not square");
    for (std::size_t j = 0; j < n; ++j) b(i + 1, j + 1) = exchange[i][j];
    b(n + i + 1, i + 1) = 1;
  }
  return b;
}

bool ExtendedMatrix::top_skew_symmetric() const {
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = i; j <= n_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

ExtendedMatrix ExtendedMatrix::with_coefficient_rows(const std::vector<std::vector<int>>& rows) const {
  ExtendedMatrix b(n_, rows.size());
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j) b(i, j) = (*this)(i, j);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n_) throw DomainError("coefficient row has the wrong length");
    for (std::size_t j = 0; j < n_; ++j) b(n_ + r + 1, j + 1) = rows[r][j];
  }
  return b;
}

ExtendedMatrix mutate_matrix(const ExtendedMatrix& b, std::size_t k) {
  const std::size_t n = b.n();
  if (k == 0 || k > n) throw DomainError("mutation direction out of range");
  ExtendedMatrix r(n, b.ell());
  for (std::size_t i = 1; i <= n + b.ell(); ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == k || j == k) {
        r(i, j) = -b(i, j);
      } else {
        r(i, j) = b(i, j) + positive_part(-b(i, k)) * b(k, j) + b(i, k) * positive_part(b(k, j));
      }
    }
  }
  return r;
}

Seed Seed::initial(const ExtendedMatrix& matrix, std::vector<std::string> labels) {
  Seed s;
  s.matrix = matrix;
  const std::size_t n = matrix.n();
  if (labels.empty())
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  if (labels.size() != n) throw DomainError("one label per cluster variable expected");
  s.cluster_labels = std::move(labels);
  for (std::size_t i = 1; i <= n; ++i) s.cluster_values.push_back(LaurentPolynomial::x_variable(n, matrix.ell(), i));
  return s;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  const ExtendedMatrix& b = s.matrix;
  const std::size_t n = b.n();
  const std::size_t ell = b.ell();
  if (k == 0 || k > n) throw DomainError("mutation direction out of range");

  ExponentVector plus_u(n, ell);
  ExponentVector minus_u(n, ell);
  for (std::size_t i = 1; i <= ell; ++i) {
    plus_u.y()[i - 1] = positive_part(b(n + i, k));
    minus_u.y()[i - 1] = positive_part(-b(n + i, k));
  }
  LaurentPolynomial plus = LaurentPolynomial::monomial(plus_u);
  LaurentPolynomial minus = LaurentPolynomial::monomial(minus_u);
  for (std::size_t i = 1; i <= n; ++i) {
    const int v = b(i, k);
    for (int p = 0; p < positive_part(v); ++p) plus = plus * s.cluster_values[i - 1];
    for (int p = 0; p < positive_part(-v); ++p) minus = minus * s.cluster_values[i - 1];
  }
  auto quotient = divide_exact(plus + minus, s.cluster_values[k - 1]);
  if (!quotient) throw InvariantError("exchange relation is not Laurent in direction " + std::to_string(k));

  Seed r = s;
  r.matrix = mutate_matrix(b, k);
  r.cluster_values[k - 1] = std::move(*quotient);
  r.cluster_labels[k - 1] = s.cluster_labels[k - 1] + "'";
  return r;
}

int QuiverView::arrow_count(std::size_t from, std::size_t to) const {
  auto it = arrows.find({from, to});
  return it == arrows.end() ? 0 : it->second;
}

QuiverView quiver_of(const ExtendedMatrix& b) {
  QuiverView q;
  q.n = b.n();
  q.ell = b.ell();
  for (std::size_t i = 1; i <= q.n + q.ell; ++i) {
    for (std::size_t j = 1; j <= q.n; ++j) {
      // Each unordered pair is read once: from the top block for i < j,
      // from the coefficient rows for frozen i.
      if (i <= q.n && i >= j) continue;
      const int v = b(i, j);
      if (v > 0) q.arrows[{i, j}] = v;
      if (v < 0) q.arrows[{j, i}] = -v;
    }
  }
  return q;
}

ExtendedMatrix matrix_of(const QuiverView& q) {
  ExtendedMatrix b(q.n, q.ell);
  for (const auto& [edge, count] : q.arrows) {
    const auto [from, to] = edge;
    if (to <= q.n) b(from, to) += count;
    if (from <= q.n) b(to, from) -= count;
  }
  return b;
}

QuiverView mutate_quiver(const QuiverView& q, std::size_t k) {
  if (k == 0 || k > q.n) throw DomainError("quiver mutation at a frozen or missing vertex");
  const std::size_t total = q.vertex_count();
  std::vector<std::vector<int>> adj(total + 1, std::vector<int>(total + 1, 0));
  for (const auto& [edge, count] : q.arrows) adj[edge.first][edge.second] += count;

  std::vector<std::vector<int>> next = adj;
  for (std::size_t i = 1; i <= total; ++i) {
    for (std::size_t j = 1; j <= total; ++j) {
      if (i == k || j == k || i == j) continue;
      if (i > q.n && j > q.n) continue;
      next[i][j] += adj[i][k] * adj[k][j];
    }
  }
  for (std::size_t i = 1; i <= total; ++i) {
    next[i][k] = adj[k][i];
    next[k][i] = adj[i][k];
  }
  QuiverView r;
  r.n = q.n;
  r.ell = q.ell;
  for (std::size_t i = 1; i <= total; ++i) {
    for (std::size_t j = i + 1; j <= total; ++j) {
      const int net = next[i][j] - next[j][i];
      if (net > 0) r.arrows[{i, j}] = net;
      if (net < 0) r.arrows[{j, i}] = -net;
    }
  }
  return r;
}

void write_matrix(std::ostream& os, const ExtendedMatrix& b) {
  os << "cck/1\n" << b.n() << ' ' << b.ell() << '\n';
  for (std::size_t i = 1; i <= b.n() + b.ell(); ++i) {
    for (std::size_t j = 1; j <= b.n(); ++j) os << (j > 1 ? " " : "") << b(i, j);
    os << '\n';
  }
}

ExtendedMatrix read_matrix(std::istream& is) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line() || line.substr(0, 5) != "cck/1") throw ParseError(line_no, "expected version line 'cck/1'");
  if (!next_line()) throw ParseError(line_no, "expected 'n ell'");
  std::istringstream head(line);
  long n = -1, ell = -1;
  std::string extra;
  if (!(head >> n >> ell) || n < 0 || ell < 0 || (head >> extra)) throw ParseError(line_no, "expected 'n ell'");
  ExtendedMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(ell));
  for (long i = 1; i <= n + ell; ++i) {
    if (!next_line()) throw ParseError(line_no, "missing matrix row " + std::to_string(i));
    std::istringstream row(line);
    for (long j = 1; j <= n; ++j) {
      int v;
      if (!(row >> v)) throw ParseError(line_no, "expected " + std::to_string(n) + " integers");
      b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
    }
    if (row >> extra) throw ParseError(line_no, "too many entries in row");
  }
  if (!b.top_skew_symmetric()) throw InvariantError("exchange block is not skew-symmetric");
  return b;
}

}  // namespace cck
