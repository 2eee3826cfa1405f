#pragma once

#include <algorithm>
#include <bitset>
#include <string>
#include <string_view>

#include "regexmend/errors.hpp"

namespace regexmend {

// The finite symbol set every regex and example string is interpreted over.
// Symbols are single bytes; the default is printable ASCII 0x20..0x7E.
class Alphabet {
public:
    static Alphabet printable_ascii() {
        std::string cs;
        for (int c = 0x20; c <= 0x7E; ++c) cs.push_back(static_cast<char>(c));
        return Alphabet(cs);
    }

    explicit Alphabet(std::string_view characters) {
        for (char c : characters) {
            unsigned char u = static_cast<unsigned char>(c);
            if (!set_.test(u)) {
                set_.set(u);
                chars_.push_back(c);
            }
        }
        std::sort(chars_.begin(), chars_.end(),
                  [](char a, char b) { return static_cast<unsigned char>(a) < static_cast<unsigned char>(b); });
        if (chars_.empty()) throw Error("alphabet must be non-empty");
    }

    bool contains(char c) const { return set_.test(static_cast<unsigned char>(c)); }

    void require(char c, const char* where) const {
        if (!contains(c))
            throw AlphabetViolation(std::string(where) + ": character '" + std::string(1, c) +
                                    "' is outside the alphabet");
    }

    void require_all(std::string_view s, const char* where) const {
        for (char c : s) require(c, where);
    }

    std::size_t size() const { return chars_.size(); }
    const std::string& characters() const { return chars_; }
    const std::bitset<256>& bits() const { return set_; }

    bool operator==(const Alphabet& o) const { return chars_ == o.chars_; }

private:
    std::string chars_;
    std::bitset<256> set_;
};

}  // namespace regexmend
