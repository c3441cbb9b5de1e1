#ifndef CDG_DEGREES_HPP
#define CDG_DEGREES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cdg::degrees {

/// A character-degree set: sorted, duplicate-free, always containing 1.
/// Multiplicities are discarded throughout; the prime graphs downstream
/// only see which degrees occur.
class DegreeSet {
 public:
  DegreeSet() : degrees_{1} {}

  /// Validates and normalizes: entries must be >= 1 and include 1.
  static DegreeSet from_values(std::vector<std::uint64_t> values);

  const std::vector<std::uint64_t>& values() const { return degrees_; }
  bool contains(std::uint64_t d) const;
  std::string to_string() const;  // "{1,3,4,5}"

  bool operator==(const DegreeSet&) const = default;

 private:
  std::vector<std::uint64_t> degrees_;
};

/// cd of the simple group Psl2(q) for a prime power q >= 4, from the
/// generic character table: {1, q-1, q, q+1}, plus (q+e)/2 for odd q where
/// e = (-1)^((q-1)/2). The lone exception is q = 5, where the generic
/// count of characters of degree q+1 is (q-5)/4 = 0, so 6 is not a degree
/// and the set is {1,3,4,5} exactly as for the isomorphic Psl2(4).
DegreeSet cd_psl2(std::uint64_t q);

/// cd of the Suzuki group Sz(q2), q2 = 2^(2m+1) with m >= 1, q2 <= 2^31:
/// {1, q2^2, q2^2+1, (q2-1)(q2-r+1), (q2-1)(q2+r+1), 2^m(q2-1)} with
/// r = 2^(m+1).
DegreeSet cd_suzuki(std::uint64_t q2);

/// Degrees of a direct product: all products taking one degree from each
/// factor, deduplicated. Throws std::overflow_error past 64 bits.
DegreeSet cd_product(const std::vector<DegreeSet>& factors);

struct TabulatedGroup {
  std::string name;
  std::optional<std::uint64_t> order;
  DegreeSet degrees;
};

/// Parsed degree-data table. The file format is line oriented with '#'
/// comments:
///   group <name>
///   order <positive integer>   (optional)
///   degrees <d1> <d2> ...
///   end
class DegreeTable {
 public:
  static DegreeTable parse(std::istream& in);
  static DegreeTable parse_string(const std::string& text);

  const TabulatedGroup* find(const std::string& name) const;
  const std::vector<TabulatedGroup>& groups() const { return groups_; }

 private:
  std::vector<TabulatedGroup> groups_;
};

/// The compiled-in copy of data/degrees.txt.
const std::string& builtin_degree_data();
const DegreeTable& builtin_table();

/// How a degree set came to be, for report labeling and recomputation.
struct GroupDescriptor {
  enum class Kind { psl2, suzuki, tabulated, synthetic, product };

  Kind kind = Kind::synthetic;
  std::uint64_t q = 0;                    // psl2: q; suzuki: q2
  std::string name;                       // tabulated / synthetic
  DegreeSet degrees;                      // synthetic only
  std::vector<GroupDescriptor> factors;   // product only

  static GroupDescriptor psl2(std::uint64_t q);
  static GroupDescriptor suzuki(std::uint64_t q2);
  static GroupDescriptor tabulated(std::string name);
  static GroupDescriptor synthetic(std::string name, DegreeSet degrees);
  static GroupDescriptor product(std::vector<GroupDescriptor> factors);

  std::string describe() const;
};

DegreeSet degrees_of(const GroupDescriptor& descriptor,
                     const DegreeTable& table);

}  // namespace cdg::degrees

#endif  // CDG_DEGREES_HPP
