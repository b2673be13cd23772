#include "qls/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qls {

namespace {

bool finite(Amplitude a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

}  // namespace

SparseState::SparseState(const RegisterLayout& layout, EntryMap entries)
    : layout_(layout), entries_(std::move(entries)) {
  const std::uint64_t dim = layout_.dimension();
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->first >= dim) {
      throw std::out_of_range("state entry outside register dimension");
    }
    if (!finite(it->second)) {
      throw std::invalid_argument("state amplitude is not finite");
    }
    if (std::abs(it->second) < kPruneEpsilon) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
}

Amplitude SparseState::amplitude(const BasisState& basis) const {
  return amplitude_at(pack(layout_, basis));
}

Amplitude SparseState::amplitude_at(std::uint64_t packed) const {
  if (packed >= layout_.dimension()) {
    throw std::out_of_range("packed label outside register dimension");
  }
  auto it = entries_.find(packed);
  return it == entries_.end() ? Amplitude{0.0, 0.0} : it->second;
}

void SparseState::set_amplitude(const BasisState& basis, Amplitude amplitude) {
  const std::uint64_t key = pack(layout_, basis);
  if (!finite(amplitude)) {
    throw std::invalid_argument("state amplitude is not finite");
  }
  if (std::abs(amplitude) < kPruneEpsilon) {
    entries_.erase(key);
  } else {
    entries_[key] = amplitude;
  }
}

void SparseState::replace_entries(EntryMap entries) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (!finite(it->second)) {
      throw std::invalid_argument("state amplitude is not finite");
    }
    if (std::abs(it->second) < kPruneEpsilon) {
      it = entries.erase(it);
    } else {
      ++it;
    }
  }
  entries_ = std::move(entries);
}

std::vector<std::pair<std::uint64_t, Amplitude>> SparseState::sorted_entries() const {
  std::vector<std::pair<std::uint64_t, Amplitude>> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseState initial_state(const RegisterLayout& layout) {
  SparseState state(layout);
  state.set_amplitude(BasisState{0, 0, 0}, Amplitude{1.0, 0.0});
  return state;
}

SparseState uniform_index_state(const RegisterLayout& layout) {
  SparseState state(layout);
  const std::uint64_t n_states = layout.index_count();
  const double amp = 1.0 / std::sqrt(static_cast<double>(n_states));
  for (std::uint64_t i = 0; i < n_states; ++i) {
    state.set_amplitude(BasisState{i, 0, 0}, Amplitude{amp, 0.0});
  }
  return state;
}

SparseState target_state(const RegisterLayout& layout,
                         std::span<const std::uint64_t> values) {
  const std::uint64_t n_states = layout.index_count();
  if (values.size() != n_states) {
    throw std::invalid_argument("target_state needs one value per index");
  }
  SparseState state(layout);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n_states));
  for (std::uint64_t i = 0; i < n_states; ++i) {
    state.set_amplitude(BasisState{i, values[i], 0}, Amplitude{amp, 0.0});
  }
  return state;
}

Amplitude inner_product(const SparseState& lhs, const SparseState& rhs) {
  if (!(lhs.layout() == rhs.layout())) {
    throw std::invalid_argument("inner_product layouts differ");
  }
  // Iterate the smaller map.
  const SparseState& a = lhs.size() <= rhs.size() ? lhs : rhs;
  const SparseState& b = lhs.size() <= rhs.size() ? rhs : lhs;
  Amplitude sum{0.0, 0.0};
  for (const auto& [key, amp] : a.entries()) {
    auto it = b.entries().find(key);
    if (it == b.entries().end()) continue;
    if (&a == &lhs) {
      sum += std::conj(amp) * it->second;
    } else {
      sum += std::conj(it->second) * amp;
    }
  }
  return sum;
}

double norm(const SparseState& state) {
  double sum = 0.0;
  for (const auto& [key, amp] : state.entries()) {
    sum += std::norm(amp);
  }
  return std::sqrt(sum);
}

void prune(SparseState& state, double epsilon) {
  auto entries = state.entries();
  for (auto it = entries.begin(); it != entries.end();) {
    if (std::abs(it->second) < epsilon) {
      it = entries.erase(it);
    } else {
      ++it;
    }
  }
  state.replace_entries(std::move(entries));
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // fold -0 into 0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string ancilla_bit_string(const RegisterLayout& layout, std::uint64_t ancilla) {
  std::string bits;
  bits.reserve(static_cast<std::size_t>(layout.ancilla_levels));
  for (int level = layout.ancilla_levels - 1; level >= 0; --level) {
    bits.push_back((ancilla >> level) & 1 ? '1' : '0');
  }
  return bits;
}

void write_state_records(std::ostream& out, const SparseState& state) {
  const RegisterLayout& layout = state.layout();
  for (const auto& [key, amp] : state.sorted_entries()) {
    const BasisState basis = unpack(layout, key);
    out << basis.index << ' ' << basis.value << ' '
        << ancilla_bit_string(layout, basis.ancilla) << ' '
        << format_real(amp.real()) << ' ' << format_real(amp.imag()) << '\n';
  }
}

}  // namespace qls
