// Copyright 2026 The ontobench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOBENCH_STATE_HPP
#define ONTOBENCH_STATE_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ontobench {

using Amplitude = std::complex<double>;

/// One mode label per particle slot, e.g. {"u+", "v-"}.
using BasisLabel = std::vector<std::string>;

/// Amplitudes with modulus below this are dropped on insertion.
inline constexpr double kPruneThreshold = 1e-14;

/// Tolerance on the squared norm of a ket flagged normalized.
inline constexpr double kNormTolerance = 1e-12;

class StateError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Sparse complex state over labeled multi-particle path bases.
///
/// A Ket is an immutable value. Terms are kept sorted by label, which makes
/// every iteration order (formatting, sampling, phase fixing) deterministic.
/// Slots that a detector has absorbed are tracked in `consumed()`; the
/// measurement layer refuses to project on them again.
class Ket {
   public:
    using Terms = std::map<BasisLabel, Amplitude>;

    Ket() = default;

    /// Builds a ket, summing duplicate labels and pruning near-zero terms.
    /// With `normalize`, the result is rescaled to unit norm; an all-zero
    /// input is rejected.
    static Ket make(std::size_t slots, const std::vector<std::pair<BasisLabel, Amplitude>> &terms,
                    bool normalize = false);

    /// Zero ket with the given arity.
    static Ket zero(std::size_t slots);

    /// Single basis state with amplitude 1.
    static Ket basis(const BasisLabel &label);

    std::size_t slots() const {
        return slots_;
    }
    const Terms &terms() const {
        return terms_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    bool normalized() const {
        return normalized_;
    }
    const std::vector<bool> &consumed() const {
        return consumed_;
    }
    bool is_consumed(std::size_t slot) const {
        return slot < consumed_.size() && consumed_[slot];
    }

    /// Amplitude of `label`, zero when absent.
    Amplitude amplitude(const BasisLabel &label) const;

    /// Sum of squared moduli.
    double norm_squared() const;
    double norm() const;

    Ket scaled(Amplitude factor) const;
    Ket with_consumed(std::size_t slot) const;

   private:
    friend class KetBuilder;

    std::size_t slots_ = 0;
    Terms terms_;
    bool normalized_ = false;
    std::vector<bool> consumed_;
};

/// Accumulates terms for a Ket of fixed arity. Used by operations that build
/// their result incrementally (superposition, mode maps, tensor products).
class KetBuilder {
   public:
    explicit KetBuilder(std::size_t slots);

    void add(const BasisLabel &label, Amplitude amp);
    void add(BasisLabel &&label, Amplitude amp);
    void set_consumed(std::vector<bool> consumed);

    /// Prunes, optionally normalizes, and freezes the accumulated terms.
    Ket build(bool normalize = false) &&;

   private:
    std::size_t slots_;
    Ket::Terms terms_;
    std::vector<bool> consumed_;
};

/// Linear combination sum_i w_i |k_i>. Not normalized.
Ket superpose(const std::vector<std::pair<Amplitude, Ket>> &weighted);

/// Product state; arity is the sum of the arities.
Ket tensor(const Ket &a, const Ket &b);

/// Renames mode labels in every slot; labels missing from `rename` pass through.
Ket relabel(const Ket &k, const std::map<std::string, std::string> &rename);

/// Probability of each basis label, |amplitude|^2.
using ProbabilityTable = std::map<BasisLabel, double>;

/// Born-rule table of a normalized ket. Throws StateError if `k` is not
/// normalized within kNormTolerance.
ProbabilityTable distribution(const Ket &k);

/// Rotates the global phase so the first term (in label order) whose modulus
/// exceeds `tol` is real and positive.
Ket canonicalize_phase(const Ket &k, double tol = kPruneThreshold);

/// True iff a = gamma * b for some unit complex gamma, term by term within tol.
bool equal_up_to_phase(const Ket &a, const Ket &b, double tol);

/// Term-by-term comparison with no phase freedom.
bool equal_exact(const Ket &a, const Ket &b, double tol);

/// Two-mode occupation state with occupancies 0 or 1.
class OccupationKet {
   public:
    using Occupation = std::pair<int, int>;
    using Terms = std::map<Occupation, Amplitude>;

    static OccupationKet make(const std::vector<std::pair<Occupation, Amplitude>> &terms,
                              bool normalize = false);

    /// Reads a 2-slot ket whose labels are "0" or "1".
    static OccupationKet from_ket(const Ket &k);

    const Terms &terms() const {
        return terms_;
    }
    bool normalized() const {
        return normalized_;
    }

   private:
    Terms terms_;
    bool normalized_ = false;
};

/// <n_A n_B>: the joint-occupancy weight that multiplies any pairwise
/// interaction between the two modes.
double occupation_pair_expectation(const OccupationKet &k);

}  // namespace ontobench

#endif
