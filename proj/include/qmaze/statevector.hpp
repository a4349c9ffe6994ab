#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qmaze/fitness.hpp"
#include "qmaze/path.hpp"
#include "qmaze/rng.hpp"

namespace qmaze {

using Amplitude = std::complex<double>;

/// Phase oracle over a fitness table: index idx is marked iff
/// table[idx] > cutoff. Holds a reference; the table must outlive it.
struct OracleSpec {
  const FitnessTable& table;
  FitnessValue cutoff;

  bool marks(PathIndex idx) const { return table[idx] > cutoff; }
};

/// Dense amplitudes over the 4^n path basis states.
class StateVector {
 public:
  /// Basis state |index>.
  StateVector(int n, PathIndex index, int length_cap = kDefaultLengthCap);
  /// Arbitrary amplitudes; size must be 4^n. Not renormalized.
  StateVector(int n, std::vector<Amplitude> amplitudes);

  int n() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& operator[](PathIndex idx) const { return amps_[idx]; }

  double norm_squared() const;
  double probability(PathIndex idx) const { return std::norm(amps_[idx]); }
  /// Total probability on the oracle's marked set.
  double marked_probability(const OracleSpec& oracle) const;

  /// Negates the amplitude of every marked index.
  void apply_oracle(const OracleSpec& oracle);
  /// Inversion about the mean: a_k <- 2 mean(a) - a_k.
  void apply_diffusion();
  /// r rounds of oracle followed by diffusion.
  void grover_iterate(const OracleSpec& oracle, int r);

  /// Samples an index with probability |a_idx|^2. Leaves the state untouched.
  PathIndex measure(Rng& rng) const;

 private:
  void check_oracle(const OracleSpec& oracle) const;

  int n_;
  std::vector<Amplitude> amps_;
};

/// Every amplitude equal to 1 / 2^n: the Hadamard transform of |N...N>.
StateVector uniform_superposition(int n, int length_cap = kDefaultLengthCap);

/// Number of indices with fitness strictly above cutoff.
std::uint64_t marked_count(const FitnessTable& table, FitnessValue cutoff);

/// Debug dump, little-endian: char[4] "QMSV", u32 n, then 4^n pairs of IEEE-754
/// doubles (real, imaginary) in index order.
void write_amplitudes(std::ostream& out, const StateVector& state);
StateVector read_amplitudes(std::istream& in, int length_cap = kDefaultLengthCap);

}  // namespace qmaze
