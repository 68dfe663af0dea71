#pragma once

#include <array>
#include <cstdint>
#include <string_view>

// Frozen reference tables the pipeline must reproduce. Each row carries
// the reference counts plus the exact AvgCit/NonCit strings the renderer
// must emit for them. Anything derived rather than frozen is marked.
namespace pubcite::frozen {

struct PublisherRow {
  std::string_view canonical;   // normalized canonical name
  std::string_view fixture_raw; // raw spelling used by the FIX-ILS generator
  std::int64_t total_items;
  std::int64_t books;
  std::int64_t chapters;
  std::int64_t citations;
  std::int64_t uncited;         // derived: half-up(pct * items / 100), fixture choice
  std::string_view avg_cit;     // printed
  std::string_view non_cit;     // printed
};

// Information Science & Library Science ranking, all 23 rows in display
// (= ranked) order.
inline constexpr std::array<PublisherRow, 23> kIlsRows{{
    {"CHANDOS PUBL", "Chandos Publ", 1456, 125, 1331, 502, 1296, "0.34", "89%"},
    {"IOS PRESS", "IOS Press", 760, 4, 756, 202, 638, "0.27", "84%"},
    {"SPRINGER", "Springer", 653, 44, 609, 353, 529, "0.54", "81%"},
    {"WALTER DE GRUYTER & CO", "Walter de Gruyter & Co", 318, 18, 300, 87, 280, "0.27", "88%"},
    {"M E SHARPE INC", "M E Sharpe Inc", 252, 15, 237, 175, 179, "0.69", "71%"},
    {"BAYWOOD PUBLISHING CO INC", "Baywood Publishing Co Inc", 154, 13, 141, 34, 131, "0.22",
     "85%"},
    {"EMERALD GROUP PUBLISHING LIMITED", "Emerald Group Publishing Limited", 144, 13, 131, 61,
     108, "0.42", "75%"},
    {"ROUTLEDGE", "Routledge", 101, 6, 95, 14, 94, "0.14", "93%"},
    {"PALGRAVE", "Palgrave", 100, 4, 96, 7, 96, "0.07", "96%"},
    {"M I T PRESS", "M I T Press", 47, 4, 43, 34, 41, "0.72", "87%"},
    {"WOODHEAD PUBL LTD", "Woodhead Publ Ltd", 41, 4, 37, 10, 37, "0.24", "90%"},
    {"NOVA SCIENCE PUBLISHERS INC", "Nova Science Publishers, Inc", 28, 3, 25, 0, 28, "0.00",
     "100%"},
    {"CAMBRIDGE UNIV PRESS", "Cambridge Univ Press", 26, 2, 24, 18, 24, "0.69", "92%"},
    {"TMC ASSER PRESS", "TMC Asser Press", 26, 1, 25, 0, 26, "0.00", "100%"},
    {"ELSEVIER", "Elsevier", 25, 2, 23, 128, 23, "5.12", "92%"},
    {"EDWARD ELGAR PUBLISHING LTD", "Edward Elgar Publishing Ltd", 23, 2, 21, 31, 21, "1.35",
     "91%"},
    {"CABI PUBLISHING C A B INT", "CABI Publishing-C A B Int", 21, 1, 20, 50, 10, "2.38", "48%"},
    {"WORLD SCIENTIFIC PUBL CO PTE LTD", "World Scientific Publ Co Pte Ltd", 18, 1, 17, 8, 16,
     "0.44", "89%"},
    {"UNIV ADELAIDE PRESS", "Univ Adelaide Press", 9, 1, 8, 0, 9, "0.00", "100%"},
    {"UTAH STATE UNIV PRESS", "Utah State Univ Press", 9, 1, 8, 1, 8, "0.11", "89%"},
    {"CRC PRESS TAYLOR & FRANCIS GROUP", "CRC Press-Taylor & Francis Group", 8, 1, 7, 0, 8,
     "0.00", "100%"},
    {"UNIV CALIFORNIA PRESS", "Univ California Press", 8, 1, 7, 27, 6, "3.38", "75%"},
    {"WILFRID LAURIER UNIV PRESS", "Wilfrid Laurier Univ Press", 8, 1, 7, 3, 6, "0.38", "75%"},
}};

struct DisciplineRow {
  std::string_view discipline;  // canonical display name (taxonomy spelling)
  std::int64_t total_items;
  std::int64_t books;
  std::int64_t chapters;
  std::int64_t citations;
  std::string_view avg_printed;   // as printed in the overview table
  std::string_view avg_computed;  // round_avg(citations / items)
  std::string_view non_cit;       // printed
};

// General overview, 19 disciplines. The Political Science row is the one
// known internal inconsistency in the reference: its stated average is
// 1.08, but its own counts give 26,851 / 31,790 = 0.84. The pipeline
// derives 0.84, and the tests assert that the difference stays.
inline constexpr std::array<DisciplineRow, 19> kOverviewRows{{
    {"Anthropology", 3146, 234, 2912, 5280, "1.68", "1.68", "75%"},
    {"Archeology", 2336, 154, 2182, 2367, "1.01", "1.01", "74%"},
    {"Area & Cultural Studies", 15029, 1273, 13756, 7572, "0.50", "0.50", "88%"},
    {"Arts", 1932, 140, 1792, 514, "0.27", "0.27", "91%"},
    {"Communication", 8703, 596, 8107, 4462, "0.51", "0.51", "85%"},
    {"Economics & Bussiness", 35129, 2577, 32552, 24498, "0.70", "0.70", "86%"},
    {"Education", 21068, 1416, 19652, 10360, "0.49", "0.49", "84%"},
    {"Geography", 2670, 215, 2455, 2754, "1.03", "1.03", "79%"},
    {"History", 20346, 1643, 18703, 12067, "0.59", "0.59", "89%"},
    {"History & Philosophy of Science", 5819, 446, 5373, 3081, "0.53", "0.53", "88%"},
    {"Information Science & Library Science", 4235, 267, 3968, 1745, "0.41", "0.41", "85%"},
    {"Languague & Linguistics", 11468, 760, 10708, 7932, "0.69", "0.69", "83%"},
    {"Law", 9824, 772, 9052, 3922, "0.40", "0.40", "88%"},
    {"Literature", 11654, 1026, 10628, 3689, "0.32", "0.32", "90%"},
    {"Managment", 7597, 543, 7054, 4389, "0.58", "0.58", "84%"},
    {"Philosophy & Ethics", 12392, 944, 11448, 6887, "0.56", "0.56", "87%"},
    {"Political Science & International Relations", 31790, 2750, 29040, 26851, "1.08", "0.84",
     "84%"},
    {"Religion", 8684, 721, 7963, 3795, "0.44", "0.44", "91%"},
    {"Sociology", 9080, 707, 8373, 13464, "1.48", "1.48", "78%"},
}};

// Corpus-wide totals (results section).
inline constexpr std::int64_t kTotalBooks = 28805;
inline constexpr std::int64_t kTotalChapters = 367616;
inline constexpr std::int64_t kTotalItems = 396421;   // 28,805 + 367,616
inline constexpr std::int64_t kFieldBooks = 17005;
inline constexpr std::int64_t kFieldChapters = 202830;
inline constexpr std::int64_t kFieldItems = 219835;   // 17,005 + 202,830
inline constexpr std::string_view kCpbFloor = "12";
inline constexpr std::string_view kCpbTwoDecimals = "12.76";
inline constexpr std::string_view kFieldCpbFloor = "11";
inline constexpr std::string_view kFieldShare = "55%";

// Tail of the Anthropology ranking: the reference order of equal-count
// rows is alphabetical, which pins the tie-break rule.
struct TailRow {
  std::string_view canonical;
  std::int64_t total_items;
  std::int64_t books;
  std::int64_t chapters;
  std::int64_t citations;
};

inline constexpr std::array<TailRow, 5> kAnthropologyTail{{
    {"UNIV WEST BOHEMIA", 11, 1, 10, 0},
    {"UNIVERSITY ALASKA PRESS", 11, 1, 10, 0},
    {"WILFRID LAURIER UNIV PRESS", 11, 1, 10, 0},
    {"UNIV NORTH CAROLINA PRESS", 1, 0, 1, 0},
    {"UNIV WASHINGTON PRESS", 1, 1, 0, 1},
}};

}  // namespace pubcite::frozen
