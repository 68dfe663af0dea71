#include "pubcite/defaults.hpp"

namespace pubcite {

// Category -> discipline mapping shipped with the tool: 40 Web of Science
// subject categories feeding 19 Humanities & Arts / Social Sciences & Law
// disciplines. Discipline display strings are kept verbatim, including
// their historical spellings.
std::string_view default_taxonomy_tsv() {
  static constexpr std::string_view text =
      "# category\tdiscipline\n"
      "Anthropology\tAnthropology\n"
      "Archaeology\tArcheology\n"
      "Cultural Studies\tArea & Cultural Studies\n"
      "Social Issues\tArea & Cultural Studies\n"
      "Area Studies\tArea & Cultural Studies\n"
      "Asian Studies\tArea & Cultural Studies\n"
      "Art\tArts\n"
      "Film, Radio, Television\tCommunication\n"
      "Communication\tCommunication\n"
      "Industrial Relations & Labor\tEconomics & Bussiness\n"
      "Business, Finance\tEconomics & Bussiness\n"
      "Business\tEconomics & Bussiness\n"
      "Economics\tEconomics & Bussiness\n"
      "Education & Educational Research\tEducation\n"
      "Education, Scientific Disciplines\tEducation\n"
      "Education, Special\tEducation\n"
      "Psychology, Educational\tEducation\n"
      "Geography\tGeography\n"
      "Demography\tGeography\n"
      "History\tHistory\n"
      "History & Philosophy Of Science\tHistory & Philosophy of Science\n"
      "Information Science & Library Science\tInformation Science & Library Science\n"
      "Language & Linguistics\tLanguague & Linguistics\n"
      "Linguistics\tLanguague & Linguistics\n"
      "Law\tLaw\n"
      "Literature, American\tLiterature\n"
      "Poetry\tLiterature\n"
      "Literature, Slavic\tLiterature\n"
      "Literature, Romance\tLiterature\n"
      "Literature, British Isles\tLiterature\n"
      "Literature, African, Australian, Canadian\tLiterature\n"
      "Literature\tLiterature\n"
      "Literature, German, Dutch, Scandinavian\tLiterature\n"
      "Management\tManagment\n"
      "Ethics\tPhilosophy & Ethics\n"
      "Philosophy\tPhilosophy & Ethics\n"
      "International Relations\tPolitical Science & International Relations\n"
      "Political Science\tPolitical Science & International Relations\n"
      "Religion\tReligion\n"
      "Sociology\tSociology\n";
  return text;
}

// National-headquarters variants folded into one canonical publisher.
std::string_view default_aliases_tsv() {
  static constexpr std::string_view text =
      "# variant\tcanonical\n"
      "Springer-Verlag Wien\tSpringer\n"
      "Springer-Verlag Tokyo\tSpringer\n"
      "Springer Publishing Co\tSpringer\n";
  return text;
}

}  // namespace pubcite
