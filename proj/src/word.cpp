#include "pseudochar/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "pseudochar/errors.hpp"

namespace pseudochar {

Letter Letter::parse(const std::string& text) {
    if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
        throw ParseError("bad letter '" + text + "'");
    std::uint32_t idx = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), idx);
    if (ec != std::errc() || ptr != text.data() + text.size()) throw ParseError("bad letter '" + text + "'");
    return Letter{text[0], idx};
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw PreconditionFailed("the free semigroup has no empty word");
}

Word Word::parse(const std::string& text) {
    std::vector<Letter> letters;
    std::size_t start = 0;
    while (true) {
        auto star = text.find('*', start);
        letters.push_back(Letter::parse(text.substr(start, star - start)));
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return Word(std::move(letters));
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
}

std::string Word::to_string() const {
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += '*';
        s += l.to_string();
    }
    return s;
}

}  // namespace pseudochar
