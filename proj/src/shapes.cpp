#include "hookchar/shapes.hpp"

#include "hookchar/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hookchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition& lambda) {
  std::vector<int> c;
  int cols = lambda[0];
  for (int j = 0; j < cols; ++j) {
    int h = 0;
    while (lambda[static_cast<std::size_t>(h)] > j) ++h;
    c.push_back(h);
  }
  return Partition(std::move(c));
}

bool is_hook(const Partition& lambda) { return lambda[1] <= 1; }

Partition make_hook(int a, int k) {
  if (a <= 0) throw DomainError("hook arm must be at least 1, got " + std::to_string(a));
  if (k < 0) throw DomainError("hook leg must be nonnegative, got " + std::to_string(k));
  std::vector<int> p{a};
  p.insert(p.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(p));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

StdTableau StdTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lens;
  for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
  Partition shape(lens);
  int n = shape.size();
  std::vector<Cell> cells(static_cast<std::size_t>(n), Cell{-1, -1});
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int e = rows[r][c];
      if (e < 1 || e > n) throw DomainError("tableau entry out of range 1..n");
      auto& cell = cells[static_cast<std::size_t>(e - 1)];
      if (cell.row != -1) throw DomainError("tableau entry repeated");
      cell = Cell{static_cast<int>(r), static_cast<int>(c)};
      if (c > 0 && rows[r][c - 1] >= e) throw DomainError("tableau rows must increase");
      if (r > 0 && rows[r - 1][c] >= e) throw DomainError("tableau columns must increase upward");
    }
  }
  return StdTableau(std::move(shape), std::move(cells));
}

std::vector<std::vector<int>> StdTableau::rows() const {
  std::vector<std::vector<int>> out;
  for (int len : shape_.parts()) out.emplace_back(static_cast<std::size_t>(len), 0);
  for (int e = 1; e <= n(); ++e) {
    const Cell& c = cell(e);
    out[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = e;
  }
  return out;
}

DescentStats descent_stats(const StdTableau& tau) {
  DescentStats s;
  for (int i = 1; i < tau.n(); ++i) {
    if (tau.cell(i + 1).row > tau.cell(i).row) {
      s.set.push_back(i);
      s.maj += i;
    }
  }
  s.des = static_cast<int>(s.set.size());
  return s;
}

StdTableau conjugate_tableau(const StdTableau& tau) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(tau.n()));
  for (int e = 1; e <= tau.n(); ++e) cells.push_back({tau.cell(e).col, tau.cell(e).row});
  return StdTableau(conjugate(tau.shape()), std::move(cells));
}

std::vector<StdTableau> enumerate_syt(const Partition& lambda, int bound) {
  int n = lambda.size();
  if (n > bound)
    throw LimitError("enumerate_syt: |lambda| = " + std::to_string(n) + " exceeds bound " +
                     std::to_string(bound));
  std::vector<StdTableau> out;
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  std::vector<Cell> cells;
  std::function<void(int)> rec = [&](int e) {
    if (e > n) {
      out.push_back(StdTableau(lambda, cells));
      return;
    }
    for (std::size_t r = 0; r < filled.size(); ++r) {
      int c = filled[r];
      if (c >= lambda[r]) continue;
      if (r > 0 && filled[r - 1] <= c) continue;
      filled[r]++;
      cells.push_back({static_cast<int>(r), c});
      rec(e + 1);
      cells.pop_back();
      filled[r]--;
    }
  };
  rec(1);
  return out;
}

StdTableau hook_tableau_from_descents(const DescentSet& S, int n) {
  if (n < 1) throw DomainError("hook_tableau_from_descents: n must be positive");
  DescentSet s = S;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw DomainError("descent set has repeats");
  for (int d : s)
    if (d < 1 || d > n - 1) throw DomainError("descent " + std::to_string(d) + " outside 1..n-1");
  std::vector<int> column{1};
  std::vector<int> row{1};
  std::size_t j = 0;
  for (int e = 2; e <= n; ++e) {
    if (j < s.size() && s[j] == e - 1) {
      column.push_back(e);
      ++j;
    } else {
      row.push_back(e);
    }
  }
  std::vector<std::vector<int>> rows{row};
  for (std::size_t i = 1; i < column.size(); ++i) rows.push_back({column[i]});
  return StdTableau::from_rows(rows);
}

std::vector<DescentSet> subsets_of_size(int m, int d) {
  std::vector<DescentSet> out;
  if (d < 0 || d > m) return out;
  DescentSet cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= m; ++x) {
      if (m - x + 1 < d - static_cast<int>(cur.size())) break;
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::string to_string(const Partition& lambda) {
  std::ostringstream os;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) os << (i ? "," : "") << lambda.parts()[i];
  return os.str();
}

std::string to_string(const StdTableau& tau) {
  std::ostringstream os;
  auto rows = tau.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << '/';
    for (std::size_t c = 0; c < rows[r].size(); ++c) os << (c ? "," : "") << rows[r][c];
  }
  return os.str();
}

std::string to_string(const DescentSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

}  // namespace hookchar
