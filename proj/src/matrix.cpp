#include "lapint/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace lapint {

UPoly char_poly(const IntMatrix& m) { return UPoly::from_integers(char_poly_coefficients(m)); }

MPoly char_poly(const PolyMatrix& m, const std::string& var) {
  std::vector<MPoly> coeffs = char_poly_coefficients(m);
  MPoly x = MPoly::variable(var);
  MPoly out;
  MPoly power(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out += coeffs[k] * power;
    if (k + 1 < coeffs.size()) power *= x;
  }
  return out;
}

Integer determinant(const IntMatrix& input) {
  input.require_square("determinant");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix path_interior_block(std::size_t k) {
  IntMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    out(i, i) = 2;
    if (i + 1 < k) out(i, i + 1) = out(i + 1, i) = -1;
  }
  return out;
}

namespace {

std::string layout(const std::vector<std::vector<std::string>>& cells,
                   std::span<const std::size_t> offsets) {
  std::size_t cols = cells.empty() ? 0 : cells.front().size();
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < cols; ++j) width[j] = std::max(width[j], row[j].size());
  }
  auto is_cut = [&](std::size_t k) {
    return std::find(offsets.begin(), offsets.end(), k) != offsets.end();
  };
  std::ostringstream os;
  std::size_t line_width = 0;
  for (std::size_t j = 0; j < cols; ++j) line_width += width[j] + 1 + (is_cut(j + 1) && j + 1 < cols ? 2 : 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0 && is_cut(i)) os << std::string(line_width, '-') << "\n";
    for (std::size_t j = 0; j < cols; ++j) {
      os << std::string(width[j] + 1 - cells[i][j].size(), ' ') << cells[i][j];
      if (j + 1 < cols && is_cut(j + 1)) os << " |";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string format_matrix(const IntMatrix& m, std::span<const std::size_t> block_offsets) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i][j] = m(i, j).get_str();
  }
  return layout(cells, block_offsets);
}

std::string format_matrix(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i][j] = m(i, j).to_string();
  }
  return layout(cells, {});
}

PolyMatrix to_poly_matrix(const IntMatrix& m) {
  return m.map([](const Integer& z) { return MPoly(z); });
}

IntMatrix evaluate_matrix(const PolyMatrix& m, const std::map<std::string, Integer>& values) {
  return m.map([&](const MPoly& p) { return p.evaluate_partial(values).constant_value(); });
}

}  // namespace lapint
