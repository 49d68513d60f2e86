#include "stieltjes/combinatorics/combinatorics.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>

namespace stieltjes {

namespace {

constexpr const char* kCacheMagic = "stieltjes-stirling1-cache";
constexpr const char* kCacheVersion = "v1";

}  // namespace

StirlingTable& StirlingTable::global() {
  static StirlingTable table;
  return table;
}

void StirlingTable::grow_locked(unsigned n_max, unsigned k_max) {
  if (k_max > k_max_ && !rows_.empty()) {
    // Widening changes every row; rebuild from scratch.
    n_max = std::max<unsigned>(n_max, static_cast<unsigned>(rows_.size()) - 1);
    rows_.clear();
  }
  k_max_ = std::max(k_max_, k_max);
  if (rows_.empty()) rows_.push_back({mpz_class(1)});
  while (rows_.size() <= n_max) {
    const unsigned n = static_cast<unsigned>(rows_.size()) - 1;  // build row n+1
    const auto& prev = rows_.back();
    const unsigned width = std::min(n + 1, k_max_) + 1;
    std::vector<mpz_class> row(width);
    for (unsigned k = 0; k < width; ++k) {
      // s(n+1,k) = s(n,k-1) - n s(n,k)
      mpz_class v = 0;
      if (k >= 1 && k - 1 < prev.size()) v = prev[k - 1];
      if (k < prev.size()) v -= mpz_class(n) * prev[k];
      row[k] = v;
    }
    rows_.push_back(std::move(row));
  }
}

void StirlingTable::reserve(unsigned n_max, unsigned k_max) {
  {
    std::shared_lock lk(mu_);
    if (rows_.size() > n_max && k_max_ >= k_max) return;
  }
  std::unique_lock lk(mu_);
  grow_locked(n_max, k_max);
}

mpz_class StirlingTable::get(unsigned n, unsigned k) {
  if (k > n) return 0;
  {
    std::shared_lock lk(mu_);
    if (n < rows_.size() && k <= k_max_) return rows_[n][k];
  }
  std::unique_lock lk(mu_);
  unsigned want_k = k_max_ >= k ? k_max_ : std::max(k, 2 * k_max_ + 8);
  grow_locked(n, want_k);
  return rows_[n][k];
}

unsigned StirlingTable::n_max() const {
  std::shared_lock lk(mu_);
  return rows_.empty() ? 0 : static_cast<unsigned>(rows_.size()) - 1;
}

unsigned StirlingTable::k_max() const {
  std::shared_lock lk(mu_);
  return k_max_;
}

void StirlingTable::clear() {
  std::unique_lock lk(mu_);
  rows_.clear();
  k_max_ = 0;
}

bool StirlingTable::save(const std::filesystem::path& file) const {
  std::shared_lock lk(mu_);
  std::error_code ec;
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path(), ec);
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return false;
    const unsigned n_max = rows_.empty() ? 0 : static_cast<unsigned>(rows_.size()) - 1;
    out << kCacheMagic << ' ' << kCacheVersion << ' ' << n_max << ' ' << k_max_ << '\n';
    for (const auto& row : rows_) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) out << ' ';
        out << row[k].get_str();
      }
      out << '\n';
    }
    if (!out) return false;
  }
  std::filesystem::rename(tmp, file, ec);
  return !ec;
}

bool StirlingTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return false;
  std::string header;
  if (!std::getline(in, header)) return false;
  std::istringstream hs(header);
  std::string magic, version;
  long n_max = -1, k_max = -1;
  if (!(hs >> magic >> version >> n_max >> k_max)) return false;
  if (magic != kCacheMagic || version != kCacheVersion || n_max < 0 || k_max < 0) return false;

  std::vector<std::vector<mpz_class>> rows;
  std::string line;
  for (long n = 0; n <= n_max; ++n) {
    if (!std::getline(in, line)) return false;
    std::istringstream ls(line);
    const long width = std::min(n, k_max) + 1;
    std::vector<mpz_class> row;
    std::string tok;
    while (ls >> tok) {
      mpz_class v;
      if (v.set_str(tok, 10) != 0) return false;
      row.push_back(v);
    }
    if (static_cast<long>(row.size()) != width) return false;
    rows.push_back(std::move(row));
  }
  // Never trust the file: the recurrence must hold for every entry.
  if (rows.empty() || rows[0][0] != 1) return false;
  for (std::size_t n = 0; n + 1 < rows.size(); ++n) {
    const auto& prev = rows[n];
    const auto& row = rows[n + 1];
    for (std::size_t k = 0; k < row.size(); ++k) {
      mpz_class v = 0;
      if (k >= 1 && k - 1 < prev.size()) v = prev[k - 1];
      if (k < prev.size()) v -= mpz_class(static_cast<unsigned long>(n)) * prev[k];
      if (v != row[k]) return false;
    }
  }
  std::unique_lock lk(mu_);
  rows_ = std::move(rows);
  k_max_ = static_cast<unsigned>(k_max);
  return true;
}

std::filesystem::path stirling_cache_file(const std::filesystem::path& dir) { return dir / "stirling1.txt"; }

mpz_class stirling1(unsigned n, unsigned k) { return StirlingTable::global().get(n, k); }

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pochhammer_deriv_at_one(unsigned j, unsigned l) {
  mpz_class v = factorial(l) * stirling1(j + 1, l + 1);
  if ((j + l) % 2) v = -v;
  return v;
}

namespace {

// Tangent numbers T_1..T_n (Brent-Harvey); B_2n follows from T_n.
class BernoulliCache {
 public:
  mpq_class get(unsigned j) {
    if (j == 0) return 1;
    if (j == 1) return mpq_class(-1, 2);
    if (j % 2) return 0;
    const unsigned n = j / 2;
    {
      std::shared_lock lk(mu_);
      if (n < even_.size()) return even_[n];
    }
    std::unique_lock lk(mu_);
    if (n >= even_.size()) build(std::max<unsigned>(n, 2 * static_cast<unsigned>(even_.size())));
    return even_[n];
  }

 private:
  void build(unsigned n_max) {
    std::vector<mpz_class> t(n_max + 1);
    t[1] = 1;
    for (unsigned k = 2; k <= n_max; ++k) t[k] = mpz_class(k - 1) * t[k - 1];
    for (unsigned k = 2; k <= n_max; ++k)
      for (unsigned j = k; j <= n_max; ++j) t[j] = mpz_class(j - k) * t[j - 1] + mpz_class(j - k + 2) * t[j];
    even_.assign(n_max + 1, mpq_class(0));
    even_[0] = 1;
    for (unsigned m = 1; m <= n_max; ++m) {
      mpz_class four_m = mpz_class(1) << (2 * m);
      mpq_class b(mpz_class(2 * m) * t[m], four_m * (four_m - 1));
      b.canonicalize();
      if (m % 2 == 0) b = -b;
      even_[m] = b;
    }
  }
  std::shared_mutex mu_;
  std::vector<mpq_class> even_;
};

class HarmonicCache {
 public:
  mpq_class get(unsigned n, unsigned r) {
    {
      std::shared_lock lk(mu_);
      if (r < tables_.size() && n < tables_[r].size()) return tables_[r][n];
    }
    std::unique_lock lk(mu_);
    if (tables_.size() <= r) tables_.resize(r + 1);
    auto& t = tables_[r];
    if (t.empty()) t.push_back(0);
    while (t.size() <= n) {
      mpz_class d;
      mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(t.size()), r);
      mpq_class inc(1, d);
      inc.canonicalize();
      t.push_back(t.back() + inc);
    }
    return t[n];
  }

 private:
  std::shared_mutex mu_;
  std::vector<std::vector<mpq_class>> tables_;
};

}  // namespace

mpq_class bernoulli(unsigned j) {
  static BernoulliCache cache;
  return cache.get(j);
}

mpq_class harmonic(unsigned n, unsigned r) {
  static HarmonicCache cache;
  return cache.get(n, r);
}

}  // namespace stieltjes
