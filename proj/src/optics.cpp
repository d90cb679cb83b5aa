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

#include "ontobench/optics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace ontobench {

namespace {

void require_distinct(const std::vector<std::string> &labels, const char *what) {
    std::set<std::string> seen;
    for (const auto &l : labels) {
        if (l.empty()) {
            throw OpticsError(std::string("empty ") + what + " mode label");
        }
        if (!seen.insert(l).second) {
            throw OpticsError(std::string("duplicate ") + what + " mode label '" + l + "'");
        }
    }
}

}  // namespace

ModeMatrix::ModeMatrix(std::size_t n, std::vector<Amplitude> row_major) : n_(n), data_(std::move(row_major)) {
    if (data_.size() != n * n) {
        throw OpticsError("matrix data does not match its dimension");
    }
}

ModeMatrix ModeMatrix::identity(std::size_t n) {
    std::vector<Amplitude> data(n * n);
    for (std::size_t i = 0; i < n; i++) {
        data[i * n + i] = 1;
    }
    return {n, std::move(data)};
}

ModeMatrix ModeMatrix::adjoint() const {
    std::vector<Amplitude> data(n_ * n_);
    for (std::size_t r = 0; r < n_; r++) {
        for (std::size_t c = 0; c < n_; c++) {
            data[c * n_ + r] = std::conj((*this)(r, c));
        }
    }
    return {n_, std::move(data)};
}

ModeMatrix ModeMatrix::operator*(const ModeMatrix &rhs) const {
    if (n_ != rhs.n_) {
        throw OpticsError("matrix dimension mismatch");
    }
    std::vector<Amplitude> data(n_ * n_);
    for (std::size_t r = 0; r < n_; r++) {
        for (std::size_t c = 0; c < n_; c++) {
            Amplitude acc = 0;
            for (std::size_t k = 0; k < n_; k++) {
                acc += (*this)(r, k) * rhs(k, c);
            }
            data[r * n_ + c] = acc;
        }
    }
    return {n_, std::move(data)};
}

double ModeMatrix::unitarity_error() const {
    ModeMatrix g = adjoint() * *this;
    double worst = 0;
    for (std::size_t r = 0; r < n_; r++) {
        for (std::size_t c = 0; c < n_; c++) {
            Amplitude expected = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(g(r, c) - expected));
        }
    }
    return worst;
}

ModeMap::ModeMap(std::vector<std::string> inputs, std::vector<std::string> outputs, ModeMatrix matrix)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), matrix_(std::move(matrix)) {
    if (inputs_.empty() || inputs_.size() != outputs_.size() || inputs_.size() != matrix_.dim()) {
        throw OpticsError("mode map needs equally many inputs, outputs and matrix columns");
    }
    require_distinct(inputs_, "input");
    require_distinct(outputs_, "output");
    double err = matrix_.unitarity_error();
    if (!(err <= kUnitarityTolerance)) {
        std::stringstream ss;
        ss << "mode map is not unitary (|M^dagger M - I| = " << err << ")";
        throw OpticsError(ss.str());
    }
}

std::vector<std::pair<std::string, Amplitude>> ModeMap::image(const std::string &input) const {
    std::vector<std::pair<std::string, Amplitude>> result;
    auto it = std::find(inputs_.begin(), inputs_.end(), input);
    if (it == inputs_.end()) {
        return result;
    }
    std::size_t col = it - inputs_.begin();
    for (std::size_t row = 0; row < outputs_.size(); row++) {
        Amplitude c = matrix_(row, col);
        if (c != Amplitude{}) {
            result.emplace_back(outputs_[row], c);
        }
    }
    return result;
}

ModeMap make_beam_splitter(BeamSplitterKind kind, const std::pair<std::string, std::string> &in,
                           const std::pair<std::string, std::string> &out) {
    const double h = 1 / std::sqrt(2.0);
    const Amplitude off = kind == BeamSplitterKind::splitter ? Amplitude{0, h} : Amplitude{0, -h};
    return ModeMap({in.first, in.second}, {out.first, out.second}, ModeMatrix(2, {h, off, off, h}));
}

ModeMap make_phase(const std::string &mode, double phi) {
    return ModeMap({mode}, {mode}, ModeMatrix(1, {std::polar(1.0, phi)}));
}

ModeMap make_mirror(const std::string &in, const std::string &out) {
    return ModeMap({in}, {out}, ModeMatrix::identity(1));
}

ModeMap make_identity(const std::vector<std::string> &modes) {
    return ModeMap(modes, modes, ModeMatrix::identity(modes.size()));
}

ModeMap compose(const ModeMap &outer, const ModeMap &inner) {
    if (outer.inputs() != inner.outputs()) {
        throw OpticsError("compose: outer inputs do not match inner outputs");
    }
    return ModeMap(inner.inputs(), outer.outputs(), outer.matrix() * inner.matrix());
}

Ket apply_to_slot(const Ket &k, std::size_t slot, const ModeMap &m) {
    if (slot >= k.slots()) {
        throw OpticsError("apply_to_slot: slot out of range");
    }
    KetBuilder b(k.slots());
    for (const auto &[label, amp] : k.terms()) {
        auto img = m.image(label[slot]);
        if (img.empty()) {
            b.add(label, amp);
            continue;
        }
        for (const auto &[mode, coef] : img) {
            BasisLabel out = label;
            out[slot] = mode;
            b.add(std::move(out), amp * coef);
        }
    }
    b.set_consumed(k.consumed());
    return std::move(b).build();
}

}  // namespace ontobench
