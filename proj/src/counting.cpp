#include "grassperm/counting.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace grassperm {

namespace {

// Pascal rows grow on demand; rows beyond the cache limit fall back to the
// multiplicative formula.
constexpr long kPascalLimit = 512;

class PascalCache {
 public:
  CountValue get(long n, long k) {
    std::lock_guard lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) {
      const auto r = static_cast<long>(rows_.size());
      std::vector<CountValue> row(static_cast<std::size_t>(r + 1), 1);
      for (long i = 1; i < r; ++i) row[i] = rows_[r - 1][i - 1] + rows_[r - 1][i];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<CountValue>> rows_;
};

PascalCache& pascal() {
  static PascalCache cache;
  return cache;
}

CountValue sign(long j) { return j % 2 == 0 ? 1 : -1; }

CountValue power_of_two(long e) {
  CountValue v = 1;
  return v << e;
}

class SharedAvoiderTable {
 public:
  std::shared_ptr<const AvoiderTable> covering(long k) {
    std::lock_guard lock(mutex_);
    if (!table_ || table_->k_max() < k) {
      const long target = std::max<long>({k, 16, table_ ? 2 * table_->k_max() : 0});
      table_ = std::make_shared<const AvoiderTable>(target);
    }
    return table_;
  }

 private:
  std::mutex mutex_;
  std::shared_ptr<const AvoiderTable> table_;
};

SharedAvoiderTable& shared_table() {
  static SharedAvoiderTable t;
  return t;
}

}  // namespace

CountValue binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n <= kPascalLimit) return pascal().get(n, k);
  k = std::min(k, n - k);
  CountValue v = 1;
  for (long i = 1; i <= k; ++i) {
    v *= n - k + i;
    v /= i;
  }
  return v;
}

CountValue catalan(long n) {
  if (n < 0) return 0;
  return exact_divide(binomial(2 * n, n), n + 1, "catalan");
}

CountValue catalan_or_zero(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("catalan_or_zero: zero denominator");
  if (numerator % denominator != 0) return 0;
  return catalan(numerator / denominator);
}

CountValue ballot(long n, long k) {
  if (n < 0 || k < 0 || k > n + 1) return 0;
  return exact_divide((n - k + 1) * binomial(n + k, n), n + 1, "ballot");
}

CountValue count_avoiders_nonidentity(long n, long k) {
  CountValue v = 1;
  for (long j = 2; j <= k - 1; ++j) v += binomial(n, j);
  return v;
}

CountValue avoider_count_closed_form(long k, long m) {
  if (k < 0 || m < 0) throw DomainError("avoider count needs k, m >= 0");
  CountValue v = 0;
  const long top = 2 * k - m;
  for (long j = 1; j <= top; ++j) {
    v += sign(j - 1) * j * binomial(top - j, j) * catalan(k - j);
  }
  return v;
}

CountValue avoider_count_recursive(long k, long m) {
  if (k < 0 || m < 0) throw DomainError("avoider count needs k, m >= 0");
  return shared_table().covering(k)->at(k, m);
}

CountValue avoider_count_binomial(long k, long m) {
  if (k < 1 || m < 1) throw DomainError("binomial avoider count needs k, m >= 1");
  CountValue v = 0;
  const auto tail = binomial(m, k);
  for (long a = 1; a <= 2 * k - m - 1; ++a) v += binomial(m, k - a) - tail;
  return v;
}

AvoiderTable::AvoiderTable(long k_max) : k_max_(k_max), m_max_(2 * k_max) {
  if (k_max < 0) throw DomainError("AvoiderTable needs k_max >= 0");
  const auto width = static_cast<std::size_t>(m_max_ + 1);
  cells_.assign(static_cast<std::size_t>(k_max_ + 1) * width, 0);
  auto cell = [&](long k, long m) -> CountValue& { return cells_[k * width + m]; };
  for (long k = 1; k <= k_max_; ++k) {
    cell(k, 0) = 1;
    for (long m = 1; m <= m_max_ && m < 2 * k - 1; ++m) {
      cell(k, m) = cell(k, m - 1) + cell(k - 1, m - 1) - ballot(k - 1, m - k);
    }
  }
}

CountValue AvoiderTable::at(long k, long m) const {
  if (k < 0 || k > k_max_) {
    throw DomainError("AvoiderTable: k = " + std::to_string(k) + " outside [0, " +
                      std::to_string(k_max_) + "]");
  }
  if (m < 0) throw DomainError("AvoiderTable: negative m");
  if (m > m_max_) return 0;
  return cells_[k * (m_max_ + 1) + m];
}

CountValue dyck_peak_pair_count(long n, long a, long b) {
  if (a < 1 || b < 1 || a + b > 2 * n) {
    throw DomainError("peak pair count needs a, b >= 1 and a + b <= 2n");
  }
  return binomial(2 * n - a - b, n - a) - binomial(2 * n - a - b, n);
}

CountValue dyck_peak_sum_count(long n, long s) {
  if (n < 1 || s > 2 * n - 2) throw DomainError("peak sum count needs n >= 1 and s <= 2n - 2");
  CountValue v = 0;
  for (long j = 1; j <= s / 2; ++j) {
    v += sign(j - 1) * j * binomial(s - j, j) * catalan(n - 1 - j);
  }
  return v;
}

CountValue fixed_point_count(long n, long k) {
  if (k < 0 || k > n) throw DomainError("fixed point count needs 0 <= k <= n");
  if (k == n) return 1;
  if (k == n - 1) return 0;
  return (k + 1) * power_of_two(n - k - 2);
}

CountValue total_avoider_words(long k) {
  if (k < 1) throw DomainError("total avoider words needs k >= 1");
  return catalan(k + 1) - 1;
}

CountValue total_avoider_perms(long k) {
  if (k < 1) throw DomainError("total avoider permutations needs k >= 1");
  return catalan(k + 1) - binomial(k, 2) - 1;
}

CountValue avoider_words_with_zeros(long k, long j) {
  if (k < 1 || j < 0) throw DomainError("avoider words by zeros needs k >= 1, j >= 0");
  return ballot(k, j + 1);
}

bool verify_ballot_catalan_identity(long a, long b) {
  if (a < 0 || b < -a || b > a) throw DomainError("ballot-Catalan identity needs b in [-a, a]");
  CountValue sum = 0;
  for (long j = 0; j <= a - b; ++j) sum += sign(j) * binomial(a - b - j, j) * catalan(a - j);
  return sum == ballot(a, b);
}

bool IdentityReport::all_passed() const {
  for (const auto& c : cases) {
    if (!c.pass) return false;
  }
  return true;
}

IdentityReport verify_concluding_identities(long k_max) {
  if (k_max < 1) throw DomainError("concluding identities need k_max >= 1");
  IdentityReport report;
  for (long k = 1; k <= k_max; ++k) {
    for (long m = 0; m < k; ++m) {
      CountValue lhs = 0;
      for (long j = 1; j <= k; ++j) {
        lhs += sign(j - 1) * j * binomial(2 * k - m - j, j) * catalan(k - j);
      }
      const auto expected = power_of_two(m);
      report.cases.push_back({"i", k, m, expected, lhs, lhs == expected});
    }
    CountValue lhs = 0;
    for (long j = 1; j <= k; ++j) lhs += sign(j - 1) * j * binomial(k - j, j) * catalan(k - j);
    const CountValue expected = power_of_two(k) - k - 1;
    report.cases.push_back({"ii", k, -1, expected, lhs, lhs == expected});
  }
  return report;
}

}  // namespace grassperm
