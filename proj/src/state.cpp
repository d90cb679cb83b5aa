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

#include "ontobench/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ontobench {

namespace {

void check_amplitude(Amplitude amp) {
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
        throw StateError("non-finite amplitude");
    }
}

void check_label(const BasisLabel &label, std::size_t slots) {
    if (label.size() != slots) {
        std::stringstream ss;
        ss << "basis label has arity " << label.size() << " but the ket has " << slots << " slots";
        throw StateError(ss.str());
    }
    for (const auto &mode : label) {
        if (mode.empty()) {
            throw StateError("empty mode label");
        }
    }
}

}  // namespace

KetBuilder::KetBuilder(std::size_t slots) : slots_(slots), consumed_(slots, false) {
    if (slots == 0) {
        throw StateError("a ket needs at least one slot");
    }
}

void KetBuilder::add(const BasisLabel &label, Amplitude amp) {
    check_label(label, slots_);
    check_amplitude(amp);
    terms_[label] += amp;
}

void KetBuilder::add(BasisLabel &&label, Amplitude amp) {
    check_label(label, slots_);
    check_amplitude(amp);
    terms_[std::move(label)] += amp;
}

void KetBuilder::set_consumed(std::vector<bool> consumed) {
    if (consumed.size() != slots_) {
        throw StateError("consumed-slot mask arity mismatch");
    }
    consumed_ = std::move(consumed);
}

Ket KetBuilder::build(bool normalize) && {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < kPruneThreshold) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    Ket k;
    k.slots_ = slots_;
    k.terms_ = std::move(terms_);
    k.consumed_ = std::move(consumed_);
    if (normalize) {
        double n2 = k.norm_squared();
        if (n2 == 0) {
            throw StateError("cannot normalize the zero ket");
        }
        if (n2 != 1) {
            double inv = 1.0 / std::sqrt(n2);
            for (auto &[label, amp] : k.terms_) {
                amp *= inv;
            }
        }
    }
    k.normalized_ = std::abs(k.norm_squared() - 1) <= kNormTolerance;
    return k;
}

Ket Ket::make(std::size_t slots, const std::vector<std::pair<BasisLabel, Amplitude>> &terms, bool normalize) {
    KetBuilder b(slots);
    for (const auto &[label, amp] : terms) {
        b.add(label, amp);
    }
    return std::move(b).build(normalize);
}

Ket Ket::zero(std::size_t slots) {
    return KetBuilder(slots).build();
}

Ket Ket::basis(const BasisLabel &label) {
    KetBuilder b(label.size());
    b.add(label, 1.0);
    return std::move(b).build();
}

Amplitude Ket::amplitude(const BasisLabel &label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Amplitude{} : it->second;
}

double Ket::norm_squared() const {
    double total = 0;
    for (const auto &[label, amp] : terms_) {
        total += std::norm(amp);
    }
    return total;
}

double Ket::norm() const {
    return std::sqrt(norm_squared());
}

Ket Ket::scaled(Amplitude factor) const {
    KetBuilder b(slots_);
    for (const auto &[label, amp] : terms_) {
        b.add(label, amp * factor);
    }
    b.set_consumed(consumed_);
    return std::move(b).build();
}

Ket Ket::with_consumed(std::size_t slot) const {
    if (slot >= slots_) {
        throw StateError("slot out of range");
    }
    Ket k = *this;
    k.consumed_[slot] = true;
    return k;
}

Ket superpose(const std::vector<std::pair<Amplitude, Ket>> &weighted) {
    if (weighted.empty()) {
        // The zero ket of the empty sum carries no arity information.
        return Ket::zero(1);
    }
    std::size_t slots = weighted.front().second.slots();
    KetBuilder b(slots);
    for (const auto &[w, k] : weighted) {
        if (k.slots() != slots) {
            throw StateError("superpose: kets have different slot counts");
        }
        for (const auto &[label, amp] : k.terms()) {
            b.add(label, w * amp);
        }
    }
    return std::move(b).build();
}

Ket tensor(const Ket &a, const Ket &b) {
    KetBuilder out(a.slots() + b.slots());
    for (const auto &[la, xa] : a.terms()) {
        for (const auto &[lb, xb] : b.terms()) {
            BasisLabel label = la;
            label.insert(label.end(), lb.begin(), lb.end());
            out.add(std::move(label), xa * xb);
        }
    }
    std::vector<bool> consumed = a.consumed();
    consumed.insert(consumed.end(), b.consumed().begin(), b.consumed().end());
    out.set_consumed(std::move(consumed));
    return std::move(out).build();
}

Ket relabel(const Ket &k, const std::map<std::string, std::string> &rename) {
    KetBuilder b(k.slots());
    for (const auto &[label, amp] : k.terms()) {
        BasisLabel renamed = label;
        for (auto &mode : renamed) {
            auto it = rename.find(mode);
            if (it != rename.end()) {
                mode = it->second;
            }
        }
        b.add(std::move(renamed), amp);
    }
    b.set_consumed(k.consumed());
    return std::move(b).build();
}

ProbabilityTable distribution(const Ket &k) {
    if (!k.normalized()) {
        throw StateError("distribution requires a normalized ket");
    }
    ProbabilityTable table;
    for (const auto &[label, amp] : k.terms()) {
        table[label] = std::min(std::norm(amp), 1.0);
    }
    return table;
}

Ket canonicalize_phase(const Ket &k, double tol) {
    for (const auto &[label, amp] : k.terms()) {
        double mag = std::abs(amp);
        if (mag > tol) {
            Ket out = k.scaled(std::conj(amp) / mag);
            // Pin the reference term to an exactly real value so repeated
            // canonicalization is a fixed point.
            KetBuilder b(out.slots());
            for (const auto &[l, a] : out.terms()) {
                b.add(l, l == label ? Amplitude{std::abs(a), 0.0} : a);
            }
            b.set_consumed(out.consumed());
            return std::move(b).build();
        }
    }
    return k;
}

bool equal_exact(const Ket &a, const Ket &b, double tol) {
    if (a.slots() != b.slots()) {
        return false;
    }
    for (const auto &[label, amp] : a.terms()) {
        if (std::abs(amp - b.amplitude(label)) > tol) {
            return false;
        }
    }
    for (const auto &[label, amp] : b.terms()) {
        if (std::abs(amp - a.amplitude(label)) > tol) {
            return false;
        }
    }
    return true;
}

bool equal_up_to_phase(const Ket &a, const Ket &b, double tol) {
    if (a.slots() != b.slots()) {
        return false;
    }
    // Supports must agree above tolerance, otherwise the two canonical phases
    // would be fixed by different reference terms.
    for (const auto &[label, amp] : a.terms()) {
        if ((std::abs(amp) > tol) != (std::abs(b.amplitude(label)) > tol)) {
            return false;
        }
    }
    for (const auto &[label, amp] : b.terms()) {
        if ((std::abs(amp) > tol) != (std::abs(a.amplitude(label)) > tol)) {
            return false;
        }
    }
    return equal_exact(canonicalize_phase(a, tol), canonicalize_phase(b, tol), tol);
}

OccupationKet OccupationKet::make(const std::vector<std::pair<Occupation, Amplitude>> &terms, bool normalize) {
    OccupationKet k;
    for (const auto &[occ, amp] : terms) {
        if ((occ.first != 0 && occ.first != 1) || (occ.second != 0 && occ.second != 1)) {
            throw StateError("occupation numbers must be 0 or 1");
        }
        check_amplitude(amp);
        k.terms_[occ] += amp;
    }
    double n2 = 0;
    for (auto it = k.terms_.begin(); it != k.terms_.end();) {
        if (std::abs(it->second) < kPruneThreshold) {
            it = k.terms_.erase(it);
        } else {
            n2 += std::norm(it->second);
            ++it;
        }
    }
    if (normalize) {
        if (n2 == 0) {
            throw StateError("cannot normalize the zero occupation ket");
        }
        if (n2 != 1) {
            double inv = 1.0 / std::sqrt(n2);
            n2 = 0;
            for (auto &[occ, amp] : k.terms_) {
                amp *= inv;
                n2 += std::norm(amp);
            }
        }
    }
    k.normalized_ = std::abs(n2 - 1) <= kNormTolerance;
    return k;
}

OccupationKet OccupationKet::from_ket(const Ket &k) {
    if (k.slots() != 2) {
        throw StateError("occupation kets have exactly two modes");
    }
    std::vector<std::pair<Occupation, Amplitude>> terms;
    for (const auto &[label, amp] : k.terms()) {
        Occupation occ;
        for (int i = 0; i < 2; i++) {
            const auto &mode = label[i];
            if (mode != "0" && mode != "1") {
                throw StateError("occupation label must be 0 or 1, got '" + mode + "'");
            }
            (i == 0 ? occ.first : occ.second) = mode == "1" ? 1 : 0;
        }
        terms.emplace_back(occ, amp);
    }
    return make(terms, false);
}

double occupation_pair_expectation(const OccupationKet &k) {
    if (!k.normalized()) {
        throw StateError("occupation_pair_expectation requires a normalized state");
    }
    double total = 0;
    for (const auto &[occ, amp] : k.terms()) {
        total += std::norm(amp) * occ.first * occ.second;
    }
    return total;
}

}  // namespace ontobench
