#include "bbs/qseries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bbs/scattering.hpp"

namespace bbs {

QPolynomial partition_function(std::int64_t box_width, const Partition& shape,
                               bool highest_only, ContentMethod method) {
  if (method == ContentMethod::brute) {
    QPolynomial total;
    for (const State& s :
         enumerate_states(box_width, shape.weight(), highest_only)) {
      if (soliton_content(s) == shape) {
        total += QPolynomial::monomial(1, energy_ctm(s));
      }
    }
    return total;
  }
  QPolynomial product = QPolynomial::one();
  for (const auto& [i, mi] : shape.multiplicities()) {
    const std::int64_t p = vacancy_number(shape, box_width, i);
    product = product * (highest_only ? qbinomial(p + mi, mi)
                                      : qbinomial(p + mi + i, mi));
  }
  const std::int64_t shift = highest_only
                                 ? quadratic_energy(shape)
                                 : quadratic_energy(shape) - shape.weight();
  return product.shifted(shift);
}

namespace {

QPolynomial total_brute(std::int64_t box_width, std::int64_t balls,
                        bool highest_only) {
  QPolynomial total;
  for (const State& s : enumerate_states(box_width, balls, highest_only)) {
    total += QPolynomial::monomial(1, energy_ctm(s));
  }
  return total;
}

QPolynomial total_closed(std::int64_t box_width, std::int64_t balls,
                         bool highest_only) {
  QPolynomial z = qbinomial(box_width, balls);
  if (highest_only) {
    // The binomial difference represents the highest-weight sum only on
    // 2s <= L (it vanishes at L = 2s-1 by column symmetry); past that the
    // set of states is empty.
    if (2 * balls > box_width) return QPolynomial();
    z -= qbinomial(box_width, balls - 1);
  }
  return z;
}

// Right-most structure recursion: condition on the number k of filled boxes
// at the right end (k >= 1 requires the box left of them to be empty).
QPolynomial total_recursive(std::int64_t box_width, std::int64_t balls,
                            bool highest_only,
                            std::map<std::pair<std::int64_t, std::int64_t>,
                                     QPolynomial>& memo) {
  if (balls == 0) return QPolynomial::one();  // holds down to box_width = -1
  if (balls < 0 || box_width < 0 || balls > box_width) return QPolynomial();
  if (highest_only && 2 * balls > box_width) return QPolynomial();
  auto it = memo.find({box_width, balls});
  if (it != memo.end()) return it->second;
  QPolynomial z = total_recursive(box_width - 1, balls, highest_only, memo);
  for (std::int64_t k = 1; k <= balls; ++k) {
    z += total_recursive(box_width - k - 1, balls - k, highest_only, memo)
             .shifted(box_width - k);
  }
  memo[{box_width, balls}] = z;
  return z;
}

}  // namespace

QPolynomial total_partition_function(std::int64_t box_width,
                                     std::int64_t balls, bool highest_only,
                                     TotalMethod method) {
  switch (method) {
    case TotalMethod::brute:
      return total_brute(box_width, balls, highest_only);
    case TotalMethod::closed:
      return total_closed(box_width, balls, highest_only);
    case TotalMethod::recursion: {
      std::map<std::pair<std::int64_t, std::int64_t>, QPolynomial> memo;
      return total_recursive(box_width, balls, highest_only, memo);
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// Paths are the occupancy words of highest-weight states in [0, L].
std::int64_t ascent_count(const std::vector<bool>& b) {
  std::int64_t n = 0;
  for (std::size_t j = 1; j < b.size(); ++j) {
    if (!b[j - 1] && b[j]) ++n;
  }
  return n;
}

std::int64_t ascent_weight(const std::vector<bool>& b) {
  // sum over j of j * theta(b_j < b_{j+1}), walls numbered from 0
  std::int64_t w = 0;
  for (std::size_t j = 1; j < b.size(); ++j) {
    if (!b[j - 1] && b[j]) w += static_cast<std::int64_t>(j);
  }
  return w;
}

std::int64_t descent_complement_weight(const std::vector<bool>& b) {
  // sum over j of (L-j) * (1 - theta(b_j < b_{j+1}))
  const std::int64_t L = static_cast<std::int64_t>(b.size());
  std::int64_t w = 0;
  for (std::size_t j = 1; j < b.size(); ++j) {
    if (b[j - 1] || !b[j]) w += L - static_cast<std::int64_t>(j);
  }
  return w;
}

}  // namespace

bool KostkaReport::all_ok() const {
  if (!global_ok) return false;
  for (const auto& check : refined) {
    if (!check.ok || !check.ascent_counts_ok) return false;
  }
  return true;
}

KostkaReport kostka_identity_check(std::int64_t box_width,
                                   std::int64_t balls) {
  if (balls < 0 || 2 * balls > box_width) {
    throw std::invalid_argument("kostka_identity_check requires 0 <= 2s <= L");
  }
  KostkaReport report;
  report.box_width = box_width;
  report.balls = balls;

  struct PathBucket {
    QPolynomial path_sum;
    bool ascent_counts_ok = true;
  };
  std::map<Partition, PathBucket> buckets;
  for (const State& s : enumerate_states(box_width, balls, true)) {
    const std::vector<bool> word = occupancy(s, 0, box_width);
    const Partition shape = soliton_content(s);
    PathBucket& bucket = buckets[shape];
    bucket.path_sum += QPolynomial::monomial(1, ascent_weight(word));
    if (ascent_count(word) != shape.row_count()) {
      bucket.ascent_counts_ok = false;
    }
    report.path_total +=
        QPolynomial::monomial(1, descent_complement_weight(word));
  }

  for (const Partition& shape : partitions_of(balls)) {
    KostkaShapeCheck check;
    check.shape = shape;
    check.fermionic =
        partition_function(box_width, shape, true, ContentMethod::fermionic);
    auto it = buckets.find(shape);
    if (it != buckets.end()) {
      check.path_sum = it->second.path_sum;
      check.ascent_counts_ok = it->second.ascent_counts_ok;
    } else {
      check.ascent_counts_ok = true;  // vacuously: no paths of this content
    }
    check.ok = (check.fermionic == check.path_sum);
    // First line of the global identity: the same product with the
    // path-independent prefactor.
    const std::int64_t prefactor = quadratic_energy(shape) -
                                   box_width * shape.row_count() +
                                   box_width * (box_width - 1) / 2;
    report.fermionic_total +=
        check.fermionic.shifted(prefactor - quadratic_energy(shape));
    report.refined.push_back(std::move(check));
  }
  report.global_ok = (report.fermionic_total == report.path_total);
  return report;
}

namespace {

// Run-length view of a state inside [0, L]: alternating filled/empty run
// lengths starting with a (possibly zero) filled run and ending with a
// (possibly zero) empty run.
struct Runs {
  std::vector<std::int64_t> filled;
  std::vector<std::int64_t> empty;
};

Runs state_runs(const State& state, std::int64_t box_width) {
  Runs runs;
  const auto& blocks = state.blocks();
  if (blocks.empty()) {
    runs.filled.push_back(0);
    runs.empty.push_back(box_width);
    return runs;
  }
  if (blocks.front().left < 0 || blocks.back().right > box_width) {
    throw std::invalid_argument("state does not fit in [0, box_width]");
  }
  runs.filled.push_back(blocks.front().left == 0 ? blocks.front().size() : 0);
  if (blocks.front().left != 0) {
    runs.empty.push_back(blocks.front().left);
    runs.filled.push_back(blocks.front().size());
  }
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    runs.empty.push_back(blocks[k].left - blocks[k - 1].right);
    runs.filled.push_back(blocks[k].size());
  }
  runs.empty.push_back(box_width - blocks.back().right);
  return runs;
}

}  // namespace

Partition state_to_restricted_partition(const State& state,
                                        std::int64_t box_width) {
  const Runs runs = state_runs(state, box_width);
  const std::size_t p = runs.filled.size();
  // One border strip per run pair except the last; p == 1 (left-packed or
  // vacuum) gives the empty partition.
  std::vector<std::int64_t> rows;  // descending
  std::int64_t width = 0;
  std::int64_t height = 0;
  for (std::size_t k = 0; k + 1 < p; ++k) {
    width += runs.empty[k];
    height += runs.filled[k] + (k == 0 ? 1 : 0);
    // Wrap the current diagram in a strip reaching (height, width).
    std::vector<std::int64_t> next;
    next.push_back(width);
    for (std::int64_t row : rows) next.push_back(row + 1);
    while (static_cast<std::int64_t>(next.size()) < height) next.push_back(1);
    rows = std::move(next);
  }
  return Partition::from_parts(rows);
}

State partition_to_state(const Partition& partition, std::int64_t box_width,
                         std::int64_t balls) {
  if (balls < 0 || balls > box_width) {
    throw std::invalid_argument("ball count must lie in [0, box_width]");
  }
  std::vector<std::int64_t> rows = partition.parts();
  if (!rows.empty() && (static_cast<std::int64_t>(rows.size()) > balls ||
                        rows.front() > box_width - balls)) {
    throw std::invalid_argument("partition exceeds the restricted box");
  }

  // Peel border strips from the outside in, recording diagram extents.
  std::vector<std::pair<std::int64_t, std::int64_t>> extents;  // height, width
  while (!rows.empty()) {
    extents.emplace_back(static_cast<std::int64_t>(rows.size()), rows.front());
    std::vector<std::int64_t> inner;
    for (std::size_t k = 1; k < rows.size(); ++k) {
      if (rows[k] - 1 > 0) inner.push_back(rows[k] - 1);
    }
    rows = std::move(inner);
  }
  std::reverse(extents.begin(), extents.end());  // innermost first

  std::vector<std::int64_t> filled, empty;
  std::int64_t height = 0, width = 0;
  for (std::size_t k = 0; k < extents.size(); ++k) {
    filled.push_back(extents[k].first - height - (k == 0 ? 1 : 0));
    empty.push_back(extents[k].second - width);
    height = extents[k].first;
    width = extents[k].second;
  }
  filled.push_back(balls - (extents.empty() ? 0 : height - 1));
  empty.push_back(box_width - balls - width);

  std::vector<bool> bits(static_cast<std::size_t>(box_width), false);
  std::size_t pos = 0;
  for (std::size_t k = 0; k < filled.size(); ++k) {
    for (std::int64_t c = 0; c < filled[k]; ++c) bits[pos++] = true;
    pos += static_cast<std::size_t>(empty[k]);
  }
  return from_occupancy(bits, 0);
}

}  // namespace bbs
