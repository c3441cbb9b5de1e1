#include "cdg/degrees.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cdg/arith.hpp"

namespace cdg::degrees {

DegreeSet DegreeSet::from_values(std::vector<std::uint64_t> values) {
  if (values.empty())
    throw std::invalid_argument("degree set: must not be empty");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.front() == 0)
    throw std::invalid_argument("degree set: degree 0 is not allowed");
  if (values.front() != 1)
    throw std::invalid_argument("degree set: must contain 1 (the trivial character)");
  DegreeSet out;
  out.degrees_ = std::move(values);
  return out;
}

bool DegreeSet::contains(std::uint64_t d) const {
  return std::binary_search(degrees_.begin(), degrees_.end(), d);
}

std::string DegreeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(degrees_[i]);
  }
  return out + "}";
}

DegreeSet cd_psl2(std::uint64_t q) {
  auto pp = arith::is_prime_power(q);
  if (!pp.has_value())
    throw std::invalid_argument("cd_psl2: q = " + std::to_string(q) +
                                " is not a prime power");
  if (q < 4)
    throw std::invalid_argument("cd_psl2: need q >= 4 for a simple group");
  if (q == 5) return DegreeSet::from_values({1, 3, 4, 5});
  std::vector<std::uint64_t> v = {1, q - 1, q, q + 1};
  if (pp->first != 2) {
    bool plus = ((q - 1) / 2) % 2 == 0;
    v.push_back(plus ? (q + 1) / 2 : (q - 1) / 2);
  }
  return DegreeSet::from_values(std::move(v));
}

DegreeSet cd_suzuki(std::uint64_t q2) {
  int e = 0;
  for (std::uint64_t t = q2; t > 1 && t % 2 == 0; t /= 2) ++e;
  bool power_of_two = q2 == (std::uint64_t{1} << e);
  if (!power_of_two || e < 3 || e % 2 == 0 || q2 > (std::uint64_t{1} << 31))
    throw std::invalid_argument(
        "cd_suzuki: need q2 = 2^(2m+1) with m >= 1 and q2 <= 2^31");
  int m = (e - 1) / 2;
  std::uint64_t r = std::uint64_t{1} << (m + 1);
  return DegreeSet::from_values({1,
                                 q2 * q2,
                                 q2 * q2 + 1,
                                 (q2 - 1) * (q2 - r + 1),
                                 (q2 - 1) * (q2 + r + 1),
                                 (std::uint64_t{1} << m) * (q2 - 1)});
}

DegreeSet cd_product(const std::vector<DegreeSet>& factors) {
  if (factors.empty())
    throw std::invalid_argument("cd_product: need at least one factor");
  std::vector<std::uint64_t> acc = {1};
  for (const DegreeSet& f : factors) {
    std::vector<std::uint64_t> next;
    next.reserve(acc.size() * f.values().size());
    for (std::uint64_t a : acc) {
      for (std::uint64_t d : f.values()) {
        unsigned __int128 wide = static_cast<unsigned __int128>(a) * d;
        if (wide > ~std::uint64_t{0})
          throw std::overflow_error("cd_product: degree product exceeds 64 bits");
        next.push_back(static_cast<std::uint64_t>(wide));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    acc = std::move(next);
  }
  return DegreeSet::from_values(std::move(acc));
}

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '(' &&
        c != ')') {
      return false;
    }
  }
  return true;
}

[[noreturn]] void parse_fail(int line, const std::string& message) {
  throw std::invalid_argument("degree data line " + std::to_string(line) +
                              ": " + message);
}

std::uint64_t parse_number(const std::string& token, int line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(line, "expected a number, got '" + token + "'");
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    parse_fail(line, "number out of 64-bit range: " + token);
  }
}

}  // namespace

DegreeTable DegreeTable::parse(std::istream& in) {
  DegreeTable table;
  std::set<std::string> names;
  std::string raw;
  int line = 0;
  bool open = false;
  std::string name;
  std::optional<std::uint64_t> order;
  std::vector<std::uint64_t> values;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw.substr(0, raw.find('#'));
    std::istringstream fields(text);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    std::vector<std::string> rest;
    for (std::string t; fields >> t;) rest.push_back(t);
    if (keyword == "group") {
      if (open) parse_fail(line, "previous record is missing 'end'");
      if (rest.size() != 1) parse_fail(line, "'group' takes exactly one name");
      if (!valid_name(rest[0]))
        parse_fail(line, "bad group name '" + rest[0] + "'");
      if (!names.insert(rest[0]).second)
        parse_fail(line, "duplicate group '" + rest[0] + "'");
      open = true;
      name = rest[0];
      order.reset();
      values.clear();
    } else if (keyword == "order") {
      if (!open) parse_fail(line, "'order' outside a group record");
      if (order.has_value()) parse_fail(line, "repeated 'order'");
      if (rest.size() != 1) parse_fail(line, "'order' takes exactly one number");
      order = parse_number(rest[0], line);
      if (*order == 0) parse_fail(line, "order must be positive");
    } else if (keyword == "degrees") {
      if (!open) parse_fail(line, "'degrees' outside a group record");
      if (!values.empty()) parse_fail(line, "repeated 'degrees'");
      if (rest.empty()) parse_fail(line, "'degrees' needs at least one entry");
      for (const std::string& t : rest) {
        std::uint64_t d = parse_number(t, line);
        if (d == 0) parse_fail(line, "degree 0 is not allowed");
        values.push_back(d);
      }
    } else if (keyword == "end") {
      if (!open) parse_fail(line, "'end' without a group record");
      if (!rest.empty()) parse_fail(line, "'end' takes no arguments");
      if (values.empty()) parse_fail(line, "group '" + name + "' has no degrees");
      TabulatedGroup g;
      g.name = name;
      g.order = order;
      try {
        g.degrees = DegreeSet::from_values(values);
      } catch (const std::invalid_argument& e) {
        parse_fail(line, std::string(e.what()));
      }
      table.groups_.push_back(std::move(g));
      open = false;
    } else {
      parse_fail(line, "unknown keyword '" + keyword + "'");
    }
  }
  if (open) parse_fail(line, "unterminated record for group '" + name + "'");
  return table;
}

DegreeTable DegreeTable::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

const TabulatedGroup* DegreeTable::find(const std::string& name) const {
  for (const auto& g : groups_) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

const DegreeTable& builtin_table() {
  static const DegreeTable table = DegreeTable::parse_string(builtin_degree_data());
  return table;
}

GroupDescriptor GroupDescriptor::psl2(std::uint64_t q) {
  GroupDescriptor d;
  d.kind = Kind::psl2;
  d.q = q;
  return d;
}

GroupDescriptor GroupDescriptor::suzuki(std::uint64_t q2) {
  GroupDescriptor d;
  d.kind = Kind::suzuki;
  d.q = q2;
  return d;
}

GroupDescriptor GroupDescriptor::tabulated(std::string name) {
  GroupDescriptor d;
  d.kind = Kind::tabulated;
  d.name = std::move(name);
  return d;
}

GroupDescriptor GroupDescriptor::synthetic(std::string name, DegreeSet degrees) {
  GroupDescriptor d;
  d.kind = Kind::synthetic;
  d.name = std::move(name);
  d.degrees = std::move(degrees);
  return d;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
  GroupDescriptor d;
  d.kind = Kind::product;
  d.factors = std::move(factors);
  return d;
}

std::string GroupDescriptor::describe() const {
  switch (kind) {
    case Kind::psl2:
      return "PSL2(" + std::to_string(q) + ")";
    case Kind::suzuki:
      return "Sz(" + std::to_string(q) + ")";
    case Kind::tabulated:
      return name;
    case Kind::synthetic:
      return "synthetic " + name;
    case Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += " x ";
        out += factors[i].describe();
      }
      return out;
    }
  }
  return "?";
}

DegreeSet degrees_of(const GroupDescriptor& descriptor, const DegreeTable& table) {
  switch (descriptor.kind) {
    case GroupDescriptor::Kind::psl2:
      return cd_psl2(descriptor.q);
    case GroupDescriptor::Kind::suzuki:
      return cd_suzuki(descriptor.q);
    case GroupDescriptor::Kind::tabulated: {
      const TabulatedGroup* g = table.find(descriptor.name);
      if (g == nullptr)
        throw std::invalid_argument("no tabulated degrees for group '" +
                                    descriptor.name + "'");
      return g->degrees;
    }
    case GroupDescriptor::Kind::synthetic:
      return descriptor.degrees;
    case GroupDescriptor::Kind::product: {
      std::vector<DegreeSet> parts;
      parts.reserve(descriptor.factors.size());
      for (const auto& f : descriptor.factors) parts.push_back(degrees_of(f, table));
      return cd_product(parts);
    }
  }
  throw std::logic_error("degrees_of: unhandled descriptor kind");
}

}  // namespace cdg::degrees
