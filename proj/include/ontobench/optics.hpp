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

#ifndef ONTOBENCH_OPTICS_HPP
#define ONTOBENCH_OPTICS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ontobench/state.hpp"

namespace ontobench {

class OpticsError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kUnitarityTolerance = 1e-12;

/// Square complex matrix stored row-major.
///
/// Orientation: column j is the image of input mode j expressed in the
/// output modes, i.e. |in_j> -> sum_i m(i, j) |out_i>.
class ModeMatrix {
   public:
    ModeMatrix() = default;
    ModeMatrix(std::size_t n, std::vector<Amplitude> row_major);

    static ModeMatrix identity(std::size_t n);

    std::size_t dim() const {
        return n_;
    }
    Amplitude operator()(std::size_t row, std::size_t col) const {
        return data_[row * n_ + col];
    }

    ModeMatrix adjoint() const;
    ModeMatrix operator*(const ModeMatrix &rhs) const;

    /// Max-entry deviation of M^dagger M from the identity.
    double unitarity_error() const;

   private:
    std::size_t n_ = 0;
    std::vector<Amplitude> data_;
};

/// A unitary linear substitution on a small set of mode labels. Beam
/// splitters are two-mode maps; phase shifters and mirrors are one-mode maps.
class ModeMap {
   public:
    /// Validates label distinctness, matching dimensions and unitarity.
    ModeMap(std::vector<std::string> inputs, std::vector<std::string> outputs, ModeMatrix matrix);

    const std::vector<std::string> &inputs() const {
        return inputs_;
    }
    const std::vector<std::string> &outputs() const {
        return outputs_;
    }
    const ModeMatrix &matrix() const {
        return matrix_;
    }

    /// Image of `input` as (output label, coefficient) pairs, or an empty
    /// vector when `input` is outside this map's domain.
    std::vector<std::pair<std::string, Amplitude>> image(const std::string &input) const;

   private:
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    ModeMatrix matrix_;
};

enum class BeamSplitterKind {
    /// |in_0> -> (|out_0> + i|out_1>)/sqrt2, |in_1> -> (i|out_0> + |out_1>)/sqrt2.
    splitter,
    /// Conjugate transpose of `splitter`; the pi phase shifters of the Hardy
    /// layout are folded into this convention.
    recombiner,
};

ModeMap make_beam_splitter(BeamSplitterKind kind, const std::pair<std::string, std::string> &in,
                           const std::pair<std::string, std::string> &out);

/// Multiplies the amplitude of `mode` by e^{i phi}.
ModeMap make_phase(const std::string &mode, double phi);

/// Identity relabeling `in -> out`, used for mirrors.
ModeMap make_mirror(const std::string &in, const std::string &out);

/// Identity on the given labels.
ModeMap make_identity(const std::vector<std::string> &modes);

/// `outer` after `inner`. Requires outer.inputs() == inner.outputs().
ModeMap compose(const ModeMap &outer, const ModeMap &inner);

/// Applies `m` to one particle slot (0-based) of `k`, linearly extended.
/// Terms whose mode in that slot lies outside m's inputs pass through.
Ket apply_to_slot(const Ket &k, std::size_t slot, const ModeMap &m);

}  // namespace ontobench

#endif
