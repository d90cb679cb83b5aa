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

#ifndef ONTOBENCH_NOTATION_HPP
#define ONTOBENCH_NOTATION_HPP

// Text formats.
//
// Ket expressions (.ket):
//
//   expr  := sum ('/' scale)?  |  '(' sum ')' ('/' scale)?
//   sum   := ('+'|'-')? term (('+'|'-') term)*
//   term  := coeff? ket
//   coeff := 'i' | number | number '*'? 'i' | '(' number (',' number)? ')'
//   ket   := '|' label (',' label)* '>'
//   scale := number | 'sqrt(' number ')'
//
// Labels are runs of [A-Za-z0-9_+'-]; '>' always closes the ket, so "|u+,v->"
// has the labels "u+" and "v-". Whitespace is insignificant outside labels
// and '#' starts a comment that runs to the end of the line.
//
// Bench layouts (.bench) are line oriented:
//
//   slots <n>
//   slot <n> modes <label>...
//   state <ket-expr>
//   stage slot=<n> bs kind=<splitter|recombiner> in=<m1>,<m2> out=<m3>,<m4>
//   stage slot=<n> phase mode=<m> phi=<radians|pi|-pi|pi/<k>>
//   stage slot=<n> mirror in=<m> out=<m>
//   stage slot=<n> custom in=<m1>,<m2> out=<m3>,<m4> matrix=<c>;<c>;<c>;<c>
//   snapshot <name>
//   detect slot=<n> <label>...
//
// Slots are numbered from 1 in bench files. A custom matrix is row-major
// with column j the image of input j; each entry uses the coeff grammar
// above (optionally with a leading '-'). A stage removes its input modes from
// the slot's alphabet and adds its outputs.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ontobench/optics.hpp"
#include "ontobench/state.hpp"

namespace ontobench {

/// Syntax or validation error at a 1-based line and column.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t col, const std::string &message);

    std::size_t line() const {
        return line_;
    }
    std::size_t col() const {
        return col_;
    }
    const std::string &message() const {
        return message_;
    }

    /// "file:line:col: message"
    std::string located(std::string_view file) const;

   private:
    std::size_t line_;
    std::size_t col_;
    std::string message_;
};

Ket parse_ket(std::string_view text);

/// Canonical rendering: label-sorted terms, global phase fixed so the first
/// term is real positive, `digits` significant digits per component.
std::string format_ket(const Ket &k, int digits = 5);

/// Enough digits for parse_ket(format_ket(k, kRoundTripDigits)) to
/// reproduce k to double precision.
inline constexpr int kRoundTripDigits = 17;

struct BenchStage {
    std::size_t slot;  // 0-based
    ModeMap map;
    std::size_t line;
};

struct BenchPlan {
    std::size_t slots = 0;
    /// Declared modes per slot before any stage runs.
    std::vector<std::vector<std::string>> alphabets;
    std::string state_text;
    Ket initial_state;
    std::vector<BenchStage> stages;
    /// Snapshot name and the number of stages applied before it is taken.
    std::vector<std::pair<std::string, std::size_t>> snapshots;
    /// Detector modes per slot (0-based).
    std::map<std::size_t, std::vector<std::string>> detectors;
};

BenchPlan parse_bench(std::string_view text);

/// Evolves the initial state through every stage, recording each snapshot
/// and finally the end state under the name "final".
std::vector<std::pair<std::string, Ket>> compile_and_run(const BenchPlan &plan);

}  // namespace ontobench

#endif
