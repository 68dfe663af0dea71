#include "pubcite/taxonomy.hpp"

#include "pubcite/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace pubcite;

TEST_CASE("default taxonomy covers the 19 disciplines and 40 categories") {
  const Taxonomy taxonomy = Taxonomy::builtin_default();
  CHECK(taxonomy.disciplines().size() == 19);
  CHECK(taxonomy.category_count() == 40);

  const std::vector<std::string> expected{
      "Anthropology",
      "Archeology",
      "Area & Cultural Studies",
      "Arts",
      "Communication",
      "Economics & Bussiness",
      "Education",
      "Geography",
      "History",
      "History & Philosophy of Science",
      "Information Science & Library Science",
      "Languague & Linguistics",
      "Law",
      "Literature",
      "Managment",
      "Philosophy & Ethics",
      "Political Science & International Relations",
      "Religion",
      "Sociology",
  };
  CHECK(taxonomy.disciplines() == expected);
  for (const auto& name : expected) CHECK(taxonomy.has_discipline(name));
  CHECK_FALSE(taxonomy.has_discipline("Astrology"));
}

TEST_CASE("default taxonomy maps the documented category groups") {
  const Taxonomy taxonomy = Taxonomy::builtin_default();
  CHECK(taxonomy.discipline_for("Demography") == "Geography");
  CHECK(taxonomy.discipline_for("Film, Radio, Television") == "Communication");
  CHECK(taxonomy.discipline_for("Cultural Studies") == "Area & Cultural Studies");
  CHECK(taxonomy.discipline_for("Asian Studies") == "Area & Cultural Studies");
  CHECK(taxonomy.discipline_for("Archaeology") == "Archeology");
  CHECK(taxonomy.discipline_for("Management") == "Managment");
  CHECK(taxonomy.discipline_for("Literature, German, Dutch, Scandinavian") == "Literature");
  CHECK(taxonomy.discipline_for("Poetry") == "Literature");
  CHECK_FALSE(taxonomy.discipline_for("Zoology").has_value());

  // seven "Literature, ..." subcategories plus Poetry and bare Literature
  int literature = 0;
  for (const char* category :
       {"Literature, American", "Poetry", "Literature, Slavic", "Literature, Romance",
        "Literature, British Isles", "Literature, African, Australian, Canadian", "Literature",
        "Literature, German, Dutch, Scandinavian"}) {
    if (taxonomy.discipline_for(category) == "Literature") ++literature;
  }
  CHECK(literature == 8);
}

TEST_CASE("category matching is case- and whitespace-insensitive") {
  const Taxonomy taxonomy = Taxonomy::builtin_default();
  CHECK(taxonomy.discipline_for("history & philosophy of science") ==
        "History & Philosophy of Science");
  CHECK(taxonomy.discipline_for("  LAW ") == "Law");
  CHECK(taxonomy.discipline_for("Film,  Radio,  Television") == "Communication");
}

TEST_CASE("disciplines_for deduplicates and ignores unmapped categories") {
  const Taxonomy taxonomy = Taxonomy::builtin_default();
  CHECK(taxonomy.disciplines_for({"Film, Radio, Television"}) ==
        std::set<std::string>{"Communication"});
  CHECK(taxonomy.disciplines_for({"Communication", "Film, Radio, Television"}) ==
        std::set<std::string>{"Communication"});
  CHECK(taxonomy.disciplines_for({"Anthropology", "Archaeology"}) ==
        std::set<std::string>{"Anthropology", "Archeology"});
  CHECK(taxonomy.disciplines_for({"Zoology"}).empty());
}

TEST_CASE("disciplines_for is monotone and stays within the discipline list") {
  const Taxonomy taxonomy = Taxonomy::builtin_default();
  const std::vector<std::string> pool{"Anthropology", "Archaeology", "History", "LAW",
                                      "Poetry",       "Zoology",     "Economics"};
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> small;
    std::vector<std::string> big;
    for (const auto& category : pool) {
      const bool in_big = rng() % 2 == 0;
      if (in_big) {
        big.push_back(category);
        if (rng() % 2 == 0) small.push_back(category);
      }
    }
    const auto small_set = taxonomy.disciplines_for(small);
    const auto big_set = taxonomy.disciplines_for(big);
    CHECK(std::includes(big_set.begin(), big_set.end(), small_set.begin(), small_set.end()));
    for (const auto& discipline : big_set) CHECK(taxonomy.has_discipline(discipline));
  }
}

TEST_CASE("taxonomy parse rejects duplicates and malformed lines") {
  CHECK_THROWS_AS(Taxonomy::parse_text("Law\tLaw\nLAW\tHistory\n"), DuplicateCategory);
  CHECK_NOTHROW(Taxonomy::parse_text("Law\tLaw\nLAW\tLaw\n"));  // agreeing duplicate
  CHECK_THROWS_AS(Taxonomy::parse_text("Law\n"), MalformedLine);
  CHECK_THROWS_AS(Taxonomy::parse_text("Law\tLaw\textra\n"), MalformedLine);
  CHECK_THROWS_AS(Taxonomy::parse_text("\tLaw\n"), MalformedLine);

  const Taxonomy tiny = Taxonomy::parse_text("# comment\n\nDemography\tGeography\n");
  CHECK(tiny.discipline_for("Demography") == "Geography");
  CHECK(tiny.disciplines() == std::vector<std::string>{"Geography"});
}
