#pragma once

#include "watermelon/core.hpp"
#include "watermelon/oracle.hpp"

#include <functional>
#include <optional>
#include <string>

namespace watermelon {

// Column-major; column j holds the down-step labels of walker j+1.
// Rows and columns are 0-based here, so the row lower bound is 2r + 1.
struct SemistandardTableau {
    std::vector<std::vector<int>> columns;

    std::size_t rows() const;
    std::optional<int> at(std::size_t row, std::size_t col) const;
    bool is_semistandard() const;
    friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;
};

SemistandardTableau tableau_from_rows(const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> tableau_rows(const SemistandardTableau& tab);
std::string format_tableau(const SemistandardTableau& tab);

struct Cell {
    std::size_t row = 0, col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

SemistandardTableau walkers_to_tableau(const WatermelonSpec& spec, const PathFamily& fam);
// lengths[j] is the length of walker j+1
PathFamily tableau_to_walkers(const SemistandardTableau& tab, const std::vector<int>& lengths);

// Observer sees the tableau after every single move, with the special cell.
using SlideObserver = std::function<void(const SemistandardTableau&, Cell)>;

Cell jt_slide(SemistandardTableau& tab, Cell special, const SlideObserver& observe = {});
Cell jt_star_slide(SemistandardTableau& tab, Cell special, const SlideObserver& observe = {});

// first-walk contacts minus one
long removable_contacts(const SemistandardTableau& tab);

struct Prop6Trace {
    std::vector<SemistandardTableau> after_round;  // tableau after each slide, before removal
    SemistandardTableau before_shift;               // all rounds done, before subtracting 1
    SemistandardTableau image;                      // final tableau of the second set
};

// Image walker n has length t - l - 1 and ends at height y + 2n + l - 3.
PathFamily prop6_forward(const WatermelonSpec& spec, const PathFamily& fam, Prop6Trace* trace = nullptr);
PathFamily prop6_inverse(const WatermelonSpec& spec, const PathFamily& image);

// Families of the second set for a given l, via the extension by l + 1 up-steps.
std::vector<PathFamily> second_set_families(const WatermelonSpec& spec, long l);

}  // namespace watermelon
