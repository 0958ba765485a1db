#include "copnc/families.hpp"

namespace copnc {

const FamilyData& frozen_family_data() {
  static const FamilyData data = [] {
    FamilyData d;
    d.petersen = {{
        {1, 0, 1, 2, 3, 7, 8, 9, 5, 6},
        {4, 2, 3, 8, 9, 0, 1, 5, 6, 4},
        {5, 6, 7, 4, 0, 8, 9, 2, 3, 7},
    }};
    d.flower3 = {{
        {3, 2, 1, 6, 1, 8, 7, 4, 9, 10, 9, 10},
        {2, 4, 0, 9, 10, 11, 3, 8, 7, 8, 11, 5},
        {1, 0, 5, 0, 7, 2, 11, 6, 5, 3, 4, 6},
    }};
    d.flower_gadget = {{
        {{{'u', 2}, {'u', 3}, {'w', 4}, {'t', 4}}},
        {{{'v', 3}, {'t', 3}, {'w', 2}, {'t', 2}}},
        {{{'u', 4}, {'w', 3}, {'v', 3}, {'v', 3}}},
    }};
    d.goldberg3 = {{
        {2, 7, 0, 2, 1, 4, 0, 1, 10, 11, 8, 10, 8, 12, 7, 9, 22, 19, 19, 18, 16, 13, 23, 22},
        {6, 3, 3, 1, 5, 13, 23, 14, 12, 15, 11, 2, 9, 21, 15, 14, 18, 20, 16, 17, 17, 20, 16, 6},
        {4, 4, 11, 18, 0, 21, 7, 6, 14, 12, 19, 9, 13, 5, 8, 22, 20, 23, 3, 10, 21, 5, 15, 17},
    }};
    d.goldberg_gadget = {{
        {{{3, 0}, {4, 0}, {1, 0}, {3, 0}, {1, 0}, {5, 0}, {8, -1}, {2, 0}, {3, 0}, {4, 0}, {1, 0}, {3, 0}, {2, 0}, {6, -1}, {8, 0}, {7, 0}}},
        {{{5, 0}, {8, 0}, {4, 0}, {3, -1}, {2, 0}, {6, 1}, {8, 0}, {7, 0}, {7, 0}, {5, 0}, {4, 0}, {2, 0}, {1, 0}, {6, 1}, {1, 0}, {7, 1}}},
        {{{7, 0}, {5, 0}, {4, 1}, {2, 0}, {6, 0}, {6, -1}, {1, 0}, {7, 1}, {5, 0}, {8, 0}, {4, 1}, {3, -1}, {6, 0}, {5, 0}, {8, -1}, {2, 0}}},
    }};
    return d;
  }();
  return data;
}

}  // namespace copnc
