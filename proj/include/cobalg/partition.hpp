#ifndef COBALG_PARTITION_HPP
#define COBALG_PARTITION_HPP

#include <string>
#include <string_view>
#include <vector>

namespace cobalg {

/* Integer partition: weakly decreasing positive parts.  The empty partition
 * is the unique partition of 0.
 *
 * Partitions index two things throughout the library: monomials in the
 * projective-space generators p_i (a part k stands for one factor p_k) and
 * Chern-number indices.  The ordering below (weight first, then
 * reverse-lexicographic, largest parts first) is the fixed deterministic
 * order used for bases, matrices and printed output.
 */
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts descending, rejects parts < 1

  int weight() const { return weight_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  std::string str() const;                       // "2+1+1"; empty partition prints "0"
  static Partition parse(std::string_view text); // inverse of str()

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  // Graded reverse-lexicographic: lower weight first; within a weight,
  // (4) before (3,1) before (2,2) before (2,1,1) before (1,1,1,1).
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
    return a.parts_ > b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of d, in the fixed order above.  partitions_of(0) is the
// singleton list holding the empty partition.
std::vector<Partition> partitions_of(int d);

}  // namespace cobalg

#endif
