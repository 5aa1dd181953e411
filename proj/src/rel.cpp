#include "relkit/rel.hpp"

#include "relkit/errors.hpp"
#include "relkit/kernels.hpp"

namespace relkit {
namespace {

void require_same_type(const Rel& r, const Rel& s, const char* op) {
  if (!(r.target() == s.target()) || !(r.source() == s.source()))
    throw TypeError(std::string(op) + ": operand types differ (" + r.type_string() + " vs " +
                    s.type_string() + ")");
}

}  // namespace

Rel::Rel(Carrier target, Carrier source)
    : target_(std::move(target)), source_(std::move(source)), bits_(target_.size(), source_.size()) {}

Rel::Rel(Carrier target, Carrier source, BitMatrix bits)
    : target_(std::move(target)), source_(std::move(source)), bits_(std::move(bits)) {
  if (bits_.rows() != target_.size() || bits_.cols() != source_.size())
    throw TypeError("matrix shape does not match carriers " + type_string());
}

Rel Rel::bottom(const Carrier& target, const Carrier& source) { return Rel(target, source); }

Rel Rel::top(const Carrier& target, const Carrier& source) {
  BitMatrix m(target.size(), source.size());
  m.fill();
  return Rel(target, source, std::move(m));
}

Rel Rel::identity(const Carrier& c) {
  BitMatrix m(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) m.set(i, i);
  return Rel(c, c, std::move(m));
}

Rel Rel::make(const Carrier& target, const Carrier& source,
              const std::vector<std::pair<std::string, std::string>>& pairs) {
  BitMatrix m(target.size(), source.size());
  for (const auto& [a, b] : pairs) {
    auto i = target.find(a);
    if (!i) throw Error("unknown label '" + a + "' in carrier " + target.name());
    auto j = source.find(b);
    if (!j) throw Error("unknown label '" + b + "' in carrier " + source.name());
    m.set(*i, *j);
  }
  return Rel(target, source, std::move(m));
}

Rel Rel::from_pairs(const Carrier& target, const Carrier& source, const std::vector<Pair>& pairs) {
  BitMatrix m(target.size(), source.size());
  for (const auto& [i, j] : pairs) {
    if (i >= target.size() || j >= source.size())
      throw Error("pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                  target.describe() + "~" + source.describe());
    m.set(i, j);
  }
  return Rel(target, source, std::move(m));
}

std::vector<Rel::Pair> Rel::pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (bits_.test(i, j)) out.emplace_back(i, j);
  return out;
}

std::string Rel::type_string() const { return target_.describe() + "~" + source_.describe(); }

Rel compose(const Rel& r, const Rel& s) {
  if (!(r.source() == s.target()))
    throw TypeError("compose: source " + r.source().describe() + " of left operand does not match target " +
                    s.target().describe() + " of right operand");
  return Rel(r.target(), s.source(), kernels::compose(r.bits(), s.bits()));
}

Rel converse(const Rel& r) { return Rel(r.source(), r.target(), kernels::transpose(r.bits())); }

Rel meet(const Rel& r, const Rel& s) {
  require_same_type(r, s, "meet");
  return Rel(r.target(), r.source(), kernels::meet(r.bits(), s.bits()));
}

Rel join(const Rel& r, const Rel& s) {
  require_same_type(r, s, "join");
  return Rel(r.target(), r.source(), kernels::join(r.bits(), s.bits()));
}

Rel negate(const Rel& r) { return Rel(r.target(), r.source(), kernels::negate(r.bits())); }

bool leq(const Rel& r, const Rel& s) {
  require_same_type(r, s, "leq");
  return kernels::leq(r.bits(), s.bits());
}

void require_homogeneous(const Rel& r, const char* op) {
  if (!r.homogeneous())
    throw TypeError(std::string(op) + ": relation of type " + r.type_string() + " is not homogeneous");
}

Rel rtc(const Rel& r) {
  require_homogeneous(r, "rtc");
  return Rel(r.target(), r.source(), kernels::closure(r.bits()));
}

Rel tc(const Rel& r) { return compose(r, rtc(r)); }

}  // namespace relkit
