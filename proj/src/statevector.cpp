#include "qmaze/statevector.hpp"

#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "binary_io.hpp"

namespace qmaze {

namespace {

std::size_t checked_dimension(int n, int length_cap) {
  if (n < 0) throw std::invalid_argument("path length must be non-negative");
  if (n > length_cap) {
    throw std::length_error("path length " + std::to_string(n) + " exceeds cap " +
                            std::to_string(length_cap));
  }
  return static_cast<std::size_t>(basis_size(n));
}

}  // namespace

StateVector::StateVector(int n, PathIndex index, int length_cap)
    : n_(n), amps_(checked_dimension(n, length_cap)) {
  if (index >= amps_.size()) throw std::out_of_range("basis index out of range");
  amps_[index] = 1.0;
}

StateVector::StateVector(int n, std::vector<Amplitude> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  if (amps_.size() != basis_size(n)) throw std::invalid_argument("amplitude count must be 4^n");
}

StateVector uniform_superposition(int n, int length_cap) {
  const std::size_t dim = checked_dimension(n, length_cap);
  StateVector state(n, std::vector<Amplitude>(dim, Amplitude(std::ldexp(1.0, -n), 0.0)));
  return state;
}

double StateVector::norm_squared() const {
  const auto count = static_cast<std::int64_t>(amps_.size());
  double total = 0.0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t k = 0; k < count; ++k) total += std::norm(amps_[static_cast<std::size_t>(k)]);
  return total;
}

void StateVector::check_oracle(const OracleSpec& oracle) const {
  if (oracle.table.n() != n_) throw std::invalid_argument("oracle table n does not match state");
}

double StateVector::marked_probability(const OracleSpec& oracle) const {
  check_oracle(oracle);
  const auto count = static_cast<std::int64_t>(amps_.size());
  const auto& values = oracle.table.values();
  const FitnessValue cutoff = oracle.cutoff;
  double total = 0.0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    if (values[idx] > cutoff) total += std::norm(amps_[idx]);
  }
  return total;
}

void StateVector::apply_oracle(const OracleSpec& oracle) {
  check_oracle(oracle);
  const auto count = static_cast<std::int64_t>(amps_.size());
  const auto& values = oracle.table.values();
  const FitnessValue cutoff = oracle.cutoff;
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    if (values[idx] > cutoff) amps_[idx] = -amps_[idx];
  }
}

void StateVector::apply_diffusion() {
  const auto count = static_cast<std::int64_t>(amps_.size());
  // Extended-precision accumulation keeps the mean's rounding from
  // accumulating into norm drift over long iteration sequences.
  long double re = 0.0L;
  long double im = 0.0L;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    re += amps_[static_cast<std::size_t>(k)].real();
    im += amps_[static_cast<std::size_t>(k)].imag();
  }
  const Amplitude twice_mean(static_cast<double>(2.0L * re / static_cast<long double>(count)),
                             static_cast<double>(2.0L * im / static_cast<long double>(count)));
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    auto& a = amps_[static_cast<std::size_t>(k)];
    a = twice_mean - a;
  }
}

void StateVector::grover_iterate(const OracleSpec& oracle, int r) {
  if (r < 0) throw std::invalid_argument("iteration count must be non-negative");
  for (int i = 0; i < r; ++i) {
    apply_oracle(oracle);
    apply_diffusion();
  }
}

PathIndex StateVector::measure(Rng& rng) const {
  // Scale the draw by the actual norm so rounding drift cannot run off the end.
  const double target = rng.uniform_unit() * norm_squared();
  double acc = 0.0;
  PathIndex last_nonzero = 0;
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    const double p = std::norm(amps_[k]);
    if (p == 0.0) continue;
    acc += p;
    last_nonzero = k;
    if (target < acc) return k;
  }
  return last_nonzero;
}

std::uint64_t marked_count(const FitnessTable& table, FitnessValue cutoff) {
  const auto& values = table.values();
  const auto count = static_cast<std::int64_t>(values.size());
  std::uint64_t marked = 0;
#pragma omp parallel for reduction(+ : marked) schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    if (values[static_cast<std::size_t>(k)] > cutoff) ++marked;
  }
  return marked;
}

namespace {
constexpr std::array<char, 4> kStateMagic{'Q', 'M', 'S', 'V'};
}

void write_amplitudes(std::ostream& out, const StateVector& state) {
  out.write(kStateMagic.data(), kStateMagic.size());
  detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(state.n()));
  for (const Amplitude& a : state.amplitudes()) {
    detail::put_le_double(out, a.real());
    detail::put_le_double(out, a.imag());
  }
  if (!out) throw std::ios_base::failure("amplitude dump write failed");
}

StateVector read_amplitudes(std::istream& in, int length_cap) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kStateMagic) throw std::invalid_argument("not an amplitude dump");
  const auto n = static_cast<int>(detail::get_le<std::uint32_t>(in));
  std::vector<Amplitude> amps(checked_dimension(n, length_cap));
  for (auto& a : amps) {
    const double re = detail::get_le_double(in);
    const double im = detail::get_le_double(in);
    a = Amplitude(re, im);
  }
  return StateVector(n, std::move(amps));
}

}  // namespace qmaze
