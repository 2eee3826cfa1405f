#pragma once

#include <string>
#include <vector>

#include "regexmend/evaluate.hpp"

namespace fixtures {

// The vowel-then-numerals task: 10 positive and 10 negative strings paired
// with candidate ([AEIOUaeiou].*[0-9].*){7,} and target [AEIOUaeiou].*[0-9]{7,}.*.
inline const std::vector<std::string>& vowel_positives() {
    static const std::vector<std::string> p = {
        "E18043699", "U530136382", "U65972791327", "U82433805", "i3390716928",
        "O789821610", "U4765749255", "E6204251",    "e6868266",  "O50693106874",
    };
    return p;
}

inline const std::vector<std::string>& vowel_negatives() {
    static const std::vector<std::string> n = {
        "u.", "jz;B", "o45", "FBcW", "I4k,S", "U", "I$#].", "A", "uV", "o20m3u5817",
    };
    return n;
}

inline regexmend::ExampleSet vowel_examples(const regexmend::Alphabet& alphabet) {
    return regexmend::ExampleSet(vowel_positives(), vowel_negatives(), alphabet);
}

inline const char* kVowelCandidate = "([AEIOUaeiou].*[0-9].*){7,}";
inline const char* kVowelTarget = "[AEIOUaeiou].*[0-9]{7,}.*";

// Five hand-checked harness records:
//   g1 candidate == target            -> success, no repair stage
//   g2 the vowel/digit walkthrough    -> success via neighborhood search
//   g3 case-blind dictionary          -> unrepaired (no single edit separates
//                                        the examples), failure
//   g4 consistent but over-general    -> consistent yet not DFA-equal, failure
//   g5 no candidate                   -> skipped
inline std::string golden_jsonl() {
    return R"({"id": "g1", "target": "[0-9]{2,4}", "candidate": "[0-9]{2,4}", "positive": ["12", "1234"], "negative": ["1", "abc"]}
{"id": "g2", "target": "[AEIOUaeiou].*[0-9]{7,}.*", "candidate": "([AEIOUaeiou].*[0-9].*){7,}", "positive": ["E18043699", "U530136382", "U65972791327", "U82433805", "i3390716928", "O789821610", "U4765749255", "E6204251", "e6868266", "O50693106874"], "negative": ["u.", "jz;B", "o45", "FBcW", "I4k,S", "U", "I$#].", "A", "uV", "o20m3u5817"]}
{"id": "g3", "target": "[A-Z]{3,}[0-9]{3,}(N|g)[A-Za-z]{2,4}", "candidate": "[A-Za-z]{3,}[0-9]{3,}N[A-Za-z]{2,4}", "positive": ["ABC123gXY"], "negative": ["AbC123gXY"]}
{"id": "g4", "target": "[0-9]{2}", "candidate": "..", "positive": ["12", "07"], "negative": ["a", "xyz"]}
{"id": "g5", "target": "a+b"}
)";
}

}  // namespace fixtures
