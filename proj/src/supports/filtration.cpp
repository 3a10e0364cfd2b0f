#include "tstruct/supports/filtration.hpp"

namespace tstruct::supports {

using exactalg::spc_contains;

Filtration::Filtration(Ring ring) : ring_(ring), head_(SpecSubset::empty(ring)) {}

Filtration::Filtration(Ring ring, SpecSubset head, std::vector<std::pair<int, SpecSubset>> steps)
    : ring_(std::move(ring)), head_(std::move(head)), steps_(std::move(steps)) {
  if (!(head_.ring() == ring_)) throw RingMismatch("filtration head over " + head_.ring().describe());
  for (const auto& [d, s] : steps_) {
    if (!(s.ring() == ring_)) throw RingMismatch("filtration step over " + s.ring().describe());
  }
}

Filtration Filtration::step(const Ring& ring, int level, const SpecSubset& Z) {
  if (Z.is_empty()) return Filtration(ring);
  return Filtration(ring, Z, {{level + 1, SpecSubset::empty(ring)}});
}

SpecSubset Filtration::at(int i) const {
  const SpecSubset* v = &head_;
  for (const auto& [d, s] : steps_) {
    if (d > i) break;
    v = &s;
  }
  return *v;
}

std::optional<int> Filtration::last_nonempty() const {
  const Filtration c = canonical();
  if (c.steps_.empty()) {
    if (c.head_.is_empty()) return std::nullopt;
    throw InputError("filtration never becomes empty");
  }
  if (!c.steps_.back().second.is_empty()) throw InputError("filtration never becomes empty");
  return c.steps_.back().first - 1;
}

std::optional<int> Filtration::first_change() const {
  const Filtration c = canonical();
  if (c.steps_.empty()) return std::nullopt;
  return c.steps_.front().first;
}

bool Filtration::is_classical() const {
  if (!(head_.is_all() || head_.is_empty())) return false;
  for (const auto& [d, s] : steps_) {
    if (!(s.is_all() || s.is_empty())) return false;
  }
  return true;
}

Filtration Filtration::canonical() const {
  std::vector<std::pair<int, SpecSubset>> out;
  const SpecSubset* prev = &head_;
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    // a step immediately superseded at the same degree never takes effect
    if (k + 1 < steps_.size() && steps_[k + 1].first <= steps_[k].first) continue;
    if (steps_[k].second == *prev) continue;
    out.push_back(steps_[k]);
    prev = &steps_[k].second;
  }
  return Filtration(ring_, head_, std::move(out));
}

std::string Filtration::to_string() const {
  const Filtration c = canonical();
  if (c.steps_.empty()) return "i -> " + c.head_.to_string();
  std::string out = "i <= " + std::to_string(c.steps_.front().first - 1) + " -> " + c.head_.to_string();
  for (std::size_t k = 0; k < c.steps_.size(); ++k) {
    const int from = c.steps_[k].first;
    out += "; ";
    if (k + 1 < c.steps_.size()) {
      const int to = c.steps_[k + 1].first - 1;
      out += from == to ? "i = " + std::to_string(from) : std::to_string(from) + " <= i <= " + std::to_string(to);
    } else {
      out += "i >= " + std::to_string(from);
    }
    out += " -> " + c.steps_[k].second.to_string();
  }
  return out;
}

bool operator==(const Filtration& a, const Filtration& b) {
  if (!(a.ring_ == b.ring_)) return false;
  const Filtration x = a.canonical(), y = b.canonical();
  return x.head_ == y.head_ && x.steps_ == y.steps_;
}

Verdict validate_filtration(const Filtration& phi) {
  auto fail = [](int degree, std::string msg) {
    Verdict v;
    v.ok = false;
    v.degree = degree;
    v.message = std::move(msg);
    return v;
  };
  const SpecSubset* prev = &phi.head();
  std::optional<int> prev_degree;
  for (const auto& [d, s] : phi.steps()) {
    if (prev_degree && d <= *prev_degree) {
      return fail(d, "step degrees must increase (" + std::to_string(d) + " after " + std::to_string(*prev_degree) + ")");
    }
    if (!spc_contains(*prev, s)) {
      return fail(d, "value at degree " + std::to_string(d) + " " + s.to_string() + " is not contained in " +
                         prev->to_string());
    }
    prev = &s;
    prev_degree = d;
  }
  if (!prev->is_empty()) {
    return fail(prev_degree ? *prev_degree : 0, "filtration must end with the empty set");
  }
  return Verdict::pass();
}

}  // namespace tstruct::supports
