#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pseudochar {

/// Free generator such as `x1` or `z3`: a family character and an index.
struct Letter {
    char family = 'x';
    std::uint32_t index = 0;

    friend auto operator<=>(const Letter&, const Letter&) = default;
    friend bool operator==(const Letter&, const Letter&) = default;

    std::string to_string() const { return family + std::to_string(index); }
    /// Parses `x1`, `y12`, ...
    static Letter parse(const std::string& text);
};

/// Nonempty word in the free semigroup. There is no empty word, hence no unit.
class Word {
   public:
    explicit Word(std::vector<Letter> letters);
    explicit Word(Letter letter) : letters_{letter} {}
    /// Parses `x1*y2*x1`.
    static Word parse(const std::string& text);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }

    friend Word operator*(const Word& a, const Word& b);

    friend bool operator==(const Word&, const Word&) = default;
    /// Shorter words first, then lexicographic on letters.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

    std::string to_string() const;

   private:
    std::vector<Letter> letters_;
};

}  // namespace pseudochar
