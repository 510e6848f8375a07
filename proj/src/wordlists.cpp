#include "ndorgs/wordlists.hpp"

#include <algorithm>
#include <cctype>

namespace ndorgs {

namespace {

std::unordered_set<std::string> make_set(std::initializer_list<const char*> words) {
  std::unordered_set<std::string> s;
  for (const char* w : words) s.insert(w);
  return s;
}

}  // namespace

const std::unordered_set<std::string>& stopwords() {
  static const auto set = make_set({
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
      "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
      "yourselves", "he", "him", "his", "himself", "she", "she's", "her",
      "hers", "herself", "it", "it's", "its", "itself", "they", "them",
      "their", "theirs", "themselves", "what", "which", "who", "whom",
      "this", "that", "that'll", "these", "those", "am", "is", "are", "was",
      "were", "be", "been", "being", "have", "has", "had", "having", "do",
      "does", "did", "doing", "a", "an", "the", "and", "but", "if", "or",
      "because", "as", "until", "while", "of", "at", "by", "for", "with",
      "about", "against", "between", "into", "through", "during", "before",
      "after", "above", "below", "to", "from", "up", "down", "in", "out",
      "on", "off", "over", "under", "again", "further", "then", "once",
      "here", "there", "when", "where", "why", "how", "all", "any", "both",
      "each", "few", "more", "most", "other", "some", "such", "no", "nor",
      "not", "only", "own", "same", "so", "than", "too", "very", "s", "t",
      "can", "will", "just", "don", "don't", "should", "should've", "now",
      "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren", "aren't",
      "couldn", "couldn't", "didn", "didn't", "doesn", "doesn't", "hadn",
      "hadn't", "hasn", "hasn't", "haven", "haven't", "isn", "isn't", "ma",
      "mightn", "mightn't", "mustn", "mustn't", "needn", "needn't", "shan",
      "shan't", "shouldn", "shouldn't", "wasn", "wasn't", "weren",
      "weren't", "won", "won't", "wouldn", "wouldn't",
  });
  return set;
}

const std::unordered_set<std::string>& english_top_words() {
  static const auto set = make_set({
      // Function words and auxiliaries.
      "the", "of", "and", "a", "to", "in", "is", "you", "that", "it", "he",
      "was", "for", "on", "are", "as", "with", "his", "they", "i", "at",
      "be", "this", "have", "from", "or", "one", "had", "by", "word", "but",
      "not", "what", "all", "were", "we", "when", "your", "can", "said",
      "there", "use", "an", "each", "which", "she", "do", "how", "their",
      "if", "will", "up", "other", "about", "out", "many", "then", "them",
      "these", "so", "some", "her", "would", "make", "like", "him", "into",
      "time", "has", "look", "two", "more", "write", "go", "see", "number",
      "no", "way", "could", "people", "my", "than", "first", "water",
      "been", "call", "who", "oil", "its", "now", "find", "long", "down",
      "day", "did", "get", "come", "made", "may", "part", "over", "new",
      "sound", "take", "only", "little", "work", "know", "place", "year",
      "live", "me", "back", "give", "most", "very", "after", "thing",
      "our", "just", "name", "good", "sentence", "man", "think", "say",
      "great", "where", "help", "through", "much", "before", "line",
      "right", "too", "mean", "old", "any", "same", "tell", "boy",
      "follow", "came", "want", "show", "also", "around", "form", "three",
      "small", "set", "put", "end", "does", "another", "well", "large",
      "must", "big", "even", "such", "here", "why", "ask", "went", "men",
      "read", "need", "land", "different", "home", "us", "move", "try",
      "kind", "hand", "picture", "again", "change", "off", "play",
      "spell", "air", "away", "animal", "house", "point", "page",
      "letter", "mother", "answer", "found", "study", "still", "learn",
      "should", "world", "high", "every", "near", "add", "food",
      "between", "below", "country", "plant", "last", "school", "father",
      "keep", "tree", "never", "start", "city", "earth", "eye", "light",
      "thought", "head", "under", "story", "saw", "left", "don't", "don",
      "while", "along", "might", "close", "something", "seem", "next",
      "hard", "open", "example", "begin", "life", "always", "those",
      "both", "paper", "together", "got", "group", "often", "run",
      "important", "until", "children", "side", "feet", "car", "mile",
      "night", "walk", "white", "sea", "began", "grow", "took", "river",
      "four", "carry", "state", "once", "book", "hear", "stop", "without",
      "second", "later", "miss", "idea", "enough", "eat", "face", "watch",
      "far", "really", "almost", "let", "above", "girl", "sometimes",
      "mountain", "cut", "young", "talk", "soon", "list", "song", "being",
      "leave", "family", "it's", "body", "music", "color", "stand", "sun",
      "questions", "fish", "area", "mark", "dog", "horse", "birds",
      "problem", "complete", "room", "knew", "since", "ever", "piece",
      "told", "usually", "didn't", "friends", "easy", "heard", "order",
      "red", "door", "sure", "become", "top", "ship", "across", "today",
      "during", "short", "better", "best", "however", "low", "hours",
      "black", "products", "happened", "whole", "measure", "remember",
      "early", "waves", "reached", "listen", "wind", "rock", "space",
      "covered", "fast", "several", "hold", "himself", "toward", "five",
      "step", "morning", "passed", "vowel", "true", "hundred", "against",
      "pattern", "numeral", "table", "north", "slowly", "money", "map",
      "farm", "pulled", "draw", "voice", "seen", "cold", "cried", "plan",
      "notice", "south", "sing", "war", "ground", "fall", "king", "town",
      "i'll", "unit", "figure", "certain", "field", "travel", "wood",
      "fire", "upon", "done", "english", "road", "half", "ten", "fly",
      "gave", "box", "finally", "wait", "correct", "oh", "quickly",
      "person", "became", "shown", "minutes", "strong", "verb", "stars",
      "front", "feel", "fact", "inches", "street", "decided", "contain",
      "course", "surface", "produce", "building", "ocean", "class",
      "note", "nothing", "rest", "carefully", "scientists", "inside",
      "wheels", "stay", "green", "known", "island", "week", "less",
      "machine", "base", "ago", "stood", "plane", "system", "behind",
      "ran", "round", "boat", "game", "force", "brought", "understand",
      "warm", "common", "bring", "explain", "dry", "though", "language",
      "shape", "deep", "thousands", "yes", "clear", "equation", "yet",
      "government", "filled", "heat", "full", "hot", "check", "object",
      "am", "rule", "among", "noun", "power", "cannot", "able", "six",
      "size", "dark", "ball", "material", "special", "heavy", "fine",
      "pair", "circle", "include", "built", "cat", "sat", "mat",
      // Frequent news and general vocabulary.
      "market", "markets", "company", "companies", "business", "shares",
      "share", "price", "prices", "profit", "profits", "bank", "banks",
      "economy", "economic", "growth", "sales", "trade", "firm", "firms",
      "deal", "investors", "investment", "financial", "chief",
      "executive", "industry", "month", "months", "rise", "rose", "fell",
      "percent", "report", "reports", "reported", "news", "announced",
      "statement", "expected", "election", "elections",
      "minister", "ministers", "party", "parties", "vote", "votes",
      "voters", "campaign", "policy", "policies", "leader", "leaders",
      "political", "parliament", "public", "plans", "law", "laws",
      "court", "courts", "police", "match", "matches", "team", "teams",
      "cup", "league", "season", "players", "player", "coach", "win",
      "wins", "winner", "won", "lost", "victory", "club", "clubs",
      "goal", "goals", "championship", "final", "race", "record",
      "software", "computer", "computers", "internet", "technology",
      "digital", "mobile", "phone", "phones", "online", "users", "user",
      "service", "services", "data", "network", "web", "site", "sites",
      "video", "games", "film", "films", "movie", "music", "award",
      "awards", "star", "stars", "band", "album", "show", "shows",
      "actor", "actress", "festival", "chart", "charts", "singer",
      "song", "songs", "television", "radio", "audience", "million",
      "billion", "rate", "rates", "tax", "taxes", "budget", "spending",
      "costs", "cost", "jobs", "workers", "strike", "offer", "bid",
      "boss", "bosses", "europe", "european", "america", "american",
      "british", "london", "week", "weeks", "year", "years", "month",
      "day", "days", "officials", "official", "spokesman", "analysts",
      "analyst", "chairman", "president", "general", "secretary",
      "director", "former", "latest", "recent", "recently", "including",
      "according", "despite", "although", "whether", "already", "still",
      "likely", "possible", "major", "key", "main", "top", "biggest",
      "largest", "higher", "lower", "strong", "weak", "value", "number",
      "numbers", "figures", "level", "levels", "result", "results",
      "decision", "decisions", "meeting", "talks", "agreement", "plan",
      "move", "moves", "action", "call", "called", "calls", "added",
      "says", "say", "saying", "told", "asked", "warned", "claimed",
      "believe", "believes", "expects", "hopes", "wants", "needs",
      "means", "comes", "goes", "gets", "takes", "makes", "looks",
      "remains", "continues", "following", "ahead", "earlier", "later",
      "currently", "against", "towards", "within", "further", "set",
      "due", "per", "cent",
  });
  return set;
}

const std::vector<std::string>& discourse_markers() {
  static const std::vector<std::string> list = {
      "however", "moreover", "furthermore", "meanwhile", "nevertheless",
      "nonetheless", "therefore", "thus", "consequently", "additionally",
      "instead", "also", "still", "yet", "finally", "then", "accordingly",
      "hence", "besides", "indeed", "likewise", "similarly", "conversely",
      "in addition", "on the other hand", "as a result", "for example",
      "for instance", "in contrast", "in fact", "in particular",
      "by contrast", "after all", "at the same time",
  };
  return list;
}

bool starts_with_discourse_marker(const std::string& sentence) {
  std::string lower;
  lower.reserve(sentence.size());
  for (char c : sentence) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (const std::string& marker : discourse_markers()) {
    if (lower.size() < marker.size()) continue;
    if (lower.compare(0, marker.size(), marker) != 0) continue;
    if (lower.size() == marker.size()) return true;
    char next = lower[marker.size()];
    if (!std::isalpha(static_cast<unsigned char>(next))) return true;
  }
  return false;
}

const std::unordered_set<std::string>& abbreviations() {
  static const auto set = make_set({
      "mr.", "mrs.", "ms.", "dr.", "prof.", "st.", "jr.", "sr.", "rev.",
      "gen.", "col.", "sgt.", "lt.", "capt.", "rep.", "sen.", "gov.",
      "pres.", "hon.", "u.s.", "u.k.", "u.n.", "e.u.", "u.s.a.", "inc.",
      "ltd.", "co.", "corp.", "plc.", "vs.", "etc.", "e.g.", "i.e.",
      "no.", "nos.", "vol.", "pp.", "a.m.", "p.m.", "jan.", "feb.",
      "mar.", "apr.", "jun.", "jul.", "aug.", "sep.", "sept.", "oct.",
      "nov.", "dec.", "mon.", "tue.", "wed.", "thu.", "fri.", "sat.",
      "sun.", "ave.", "blvd.", "rd.", "mt.", "ft.", "approx.", "dept.",
      "est.", "fig.", "min.", "max.", "misc.",
  });
  return set;
}

const std::unordered_set<std::string>& pronouns() {
  static const auto set = make_set({
      "i", "you", "he", "she", "it", "we", "they", "me", "him", "her",
      "us", "them", "my", "your", "his", "its", "our", "their", "mine",
      "yours", "hers", "ours", "theirs", "this", "that", "these", "those",
      "myself", "yourself", "himself", "herself", "itself", "ourselves",
      "themselves", "one", "someone", "anyone", "everyone", "nobody",
      "somebody", "anybody", "everybody",
  });
  return set;
}

const std::unordered_set<std::string>& title_small_words() {
  static const auto set = make_set({
      "a", "an", "the", "and", "or", "but", "nor", "of", "in", "on",
      "at", "to", "for", "by", "with", "from", "as", "per", "via",
  });
  return set;
}

const std::unordered_set<std::string>& dangling_terminal_words() {
  static const auto set = make_set({
      "a", "an", "the", "and", "or", "but", "nor", "of", "in", "on",
      "at", "to", "for", "by", "with", "from", "as", "than", "that",
      "which", "who", "whose", "because", "although", "while", "if",
      "when", "into", "onto", "about", "over", "under", "its", "their",
      "his", "her",
  });
  return set;
}

const std::unordered_set<std::string>& gazetteer() {
  static const auto set = make_set({
      "Afghanistan", "Africa", "Albania", "Algeria", "America", "Angola",
      "Argentina", "Armenia", "Asia", "Australia", "Austria",
      "Azerbaijan", "Bahrain", "Bangladesh", "Belarus", "Belgium",
      "Bolivia", "Bosnia", "Botswana", "Brazil", "Britain", "Bulgaria",
      "Burma", "Cambodia", "Cameroon", "Canada", "Chile", "China",
      "Colombia", "Congo", "Croatia", "Cuba", "Cyprus", "Czech",
      "Denmark", "Ecuador", "Egypt", "England", "Eritrea", "Estonia",
      "Ethiopia", "Europe", "Fiji", "Finland", "France", "Georgia",
      "Germany", "Ghana", "Greece", "Guatemala", "Guinea", "Haiti",
      "Honduras", "Hungary", "Iceland", "India", "Indonesia", "Iran",
      "Iraq", "Ireland", "Israel", "Italy", "Jamaica", "Japan",
      "Jordan", "Kazakhstan", "Kenya", "Korea", "Kosovo", "Kuwait",
      "Laos", "Latvia", "Lebanon", "Liberia", "Libya", "Lithuania",
      "Luxembourg", "Macedonia", "Madagascar", "Malawi", "Malaysia",
      "Mali", "Malta", "Mexico", "Moldova", "Mongolia", "Montenegro",
      "Morocco", "Mozambique", "Namibia", "Nepal", "Netherlands",
      "Nicaragua", "Niger", "Nigeria", "Norway", "Oman", "Pakistan",
      "Panama", "Paraguay", "Peru", "Philippines", "Poland", "Portugal",
      "Qatar", "Romania", "Russia", "Rwanda", "Scotland", "Senegal",
      "Serbia", "Singapore", "Slovakia", "Slovenia", "Somalia", "Spain",
      "Sudan", "Sweden", "Switzerland", "Syria", "Taiwan", "Tajikistan",
      "Tanzania", "Thailand", "Tibet", "Togo", "Tunisia", "Turkey",
      "Turkmenistan", "Uganda", "Ukraine", "Uruguay", "Uzbekistan",
      "Venezuela", "Vietnam", "Wales", "Yemen", "Zambia", "Zimbabwe",
      // Multi-token country and region names, stored whole.
      "United States", "United Kingdom", "South Korea", "North Korea",
      "South Africa", "North America", "South America", "Saudi Arabia",
      "New Zealand", "Sri Lanka", "Costa Rica", "El Salvador",
      "Middle East", "Eastern Europe", "Western Europe", "Hong Kong",
      "Czech Republic", "Dominican Republic", "United Arab Emirates",
      "Ivory Coast", "Papua New Guinea", "Soviet Union",
      // Major cities and place tokens.
      "London", "Paris", "Berlin", "Madrid", "Rome", "Moscow", "Beijing",
      "Tokyo", "Seoul", "Delhi", "Mumbai", "Sydney", "Toronto", "Dublin",
      "Edinburgh", "Cardiff", "Belfast", "Manchester", "Liverpool",
      "Birmingham", "Leeds", "Glasgow", "Amsterdam", "Brussels",
      "Geneva", "Vienna", "Athens", "Lisbon", "Warsaw", "Prague",
      "Budapest", "Istanbul", "Cairo", "Nairobi", "Lagos", "Baghdad",
      "Tehran", "Kabul", "Shanghai", "Washington", "York", "Boston",
      "Chicago", "Angeles", "Francisco", "Houston", "Dallas", "Atlanta",
      "Seattle", "Miami", "Vegas", "Brasilia", "Ottawa", "Canberra",
      "Wellington", "Oslo", "Stockholm", "Copenhagen", "Helsinki",
      "Kiev", "Kyiv", "Minsk", "Baku", "Riyadh", "Dubai", "Jerusalem",
      "Gaza", "Damascus", "Beirut", "Amman", "Doha", "Bangkok",
      "Jakarta", "Manila", "Hanoi", "Singapore", "Pyongyang", "Taipei",
      "Havana", "Caracas", "Bogota", "Lima", "Santiago", "Mexico City",
      "Buenos Aires", "New York", "Los Angeles", "San Francisco",
      "Las Vegas", "Rio de Janeiro", "Sao Paulo", "Cape Town",
      "Johannesburg", "Abuja", "Accra", "Addis Ababa", "Khartoum",
      "Tripoli", "Algiers", "Tunis", "Rabat", "Casablanca",
  });
  return set;
}

const std::unordered_set<std::string>& organization_suffixes() {
  static const auto set = make_set({
      "Inc", "Corp", "Corporation", "Ltd", "Co", "Plc", "LLC", "Group",
      "Holdings", "Industries", "Enterprises", "International",
      "Company", "Party", "University", "College", "School", "Bank",
      "Association", "Institute", "Institution", "Foundation", "Agency",
      "Authority", "Committee", "Council", "Commission", "Ministry",
      "Department", "Office", "Bureau", "Union", "Federation",
      "Organization", "Organisation", "Club", "FC", "United", "City",
      "Rovers", "Wanderers", "Athletic", "Airlines", "Airways",
      "Motors", "Telecom", "Communications", "Systems", "Networks",
      "Technologies", "Labs", "Laboratories", "Pharmaceuticals",
      "Energy", "Petroleum", "Steel", "Media", "Entertainment",
      "Studios", "Pictures", "Records", "Press", "Times", "Post",
      "Herald", "Tribune", "Journal", "News", "Broadcasting", "Fund",
      "Trust", "Exchange", "Securities", "Capital", "Partners",
      "Consulting", "Services", "Society", "League", "Federation",
      "Assembly", "Parliament", "Congress", "Senate",
  });
  return set;
}

const std::unordered_set<std::string>& first_names() {
  static const auto set = make_set({
      "James", "John", "Robert", "Michael", "William", "David",
      "Richard", "Joseph", "Thomas", "Charles", "Christopher", "Daniel",
      "Matthew", "Anthony", "Donald", "Mark", "Paul", "Steven",
      "Andrew", "Kenneth", "George", "Joshua", "Kevin", "Brian",
      "Edward", "Ronald", "Timothy", "Jason", "Jeffrey", "Ryan",
      "Jacob", "Gary", "Nicholas", "Eric", "Jonathan", "Stephen",
      "Larry", "Justin", "Scott", "Brandon", "Benjamin", "Samuel",
      "Frank", "Gregory", "Raymond", "Alexander", "Patrick", "Jack",
      "Dennis", "Jerry", "Tyler", "Aaron", "Jose", "Adam", "Henry",
      "Nathan", "Douglas", "Zachary", "Peter", "Kyle", "Walter",
      "Harold", "Jeremy", "Ethan", "Carl", "Keith", "Roger", "Gerald",
      "Christian", "Terry", "Sean", "Arthur", "Austin", "Noah",
      "Lawrence", "Jesse", "Joe", "Bryan", "Billy", "Jordan", "Albert",
      "Dylan", "Bruce", "Willie", "Gabriel", "Alan", "Juan", "Logan",
      "Wayne", "Ralph", "Roy", "Eugene", "Randy", "Vincent", "Russell",
      "Louis", "Philip", "Bobby", "Johnny", "Bradley", "Martin", "Tony",
      "Gordon", "Colin", "Graham", "Ian", "Neil", "Stuart", "Trevor",
      "Mary", "Patricia", "Jennifer", "Linda", "Elizabeth", "Barbara",
      "Susan", "Jessica", "Sarah", "Karen", "Nancy", "Lisa", "Margaret",
      "Betty", "Sandra", "Ashley", "Dorothy", "Kimberly", "Emily",
      "Donna", "Michelle", "Carol", "Amanda", "Melissa", "Deborah",
      "Stephanie", "Rebecca", "Laura", "Sharon", "Cynthia", "Kathleen",
      "Amy", "Shirley", "Angela", "Helen", "Anna", "Brenda", "Pamela",
      "Nicole", "Samantha", "Katherine", "Emma", "Ruth", "Christine",
      "Catherine", "Debra", "Rachel", "Carolyn", "Janet", "Virginia",
      "Maria", "Heather", "Diane", "Julie", "Joyce", "Victoria",
      "Kelly", "Christina", "Lauren", "Joan", "Evelyn", "Olivia",
      "Judith", "Megan", "Cheryl", "Martha", "Andrea", "Frances",
      "Hannah", "Jacqueline", "Ann", "Jean", "Alice", "Kathryn",
      "Gloria", "Teresa", "Doris", "Sara", "Janice", "Julia", "Grace",
      "Judy", "Abigail", "Marie", "Denise", "Beverly", "Amber",
      "Theresa", "Sophia", "Marilyn", "Danielle", "Diana", "Brittany",
      "Natalie", "Charlotte", "Rose", "Alexis", "Kayla",
  });
  return set;
}

const std::unordered_set<std::string>& attribution_verbs() {
  static const auto set = make_set({
      "said", "says", "say", "told", "tells", "added", "adds", "stated",
      "states", "claimed", "claims", "warned", "warns", "noted", "notes",
      "argued", "argues", "insisted", "insists", "explained", "explains",
      "announced", "announces", "declared", "declares", "reported",
      "reports", "commented", "comments", "admitted", "admits",
      "confirmed", "confirms", "suggested", "suggests", "acknowledged",
      "according",
  });
  return set;
}

const std::unordered_set<std::string>& adverbial_cues() {
  static const auto set = make_set({
      "in", "on", "at", "by", "for", "with", "under", "over", "after",
      "before", "during", "despite", "according", "as", "since",
      "while", "when", "amid", "among", "across", "throughout",
      "meanwhile", "however", "moreover", "furthermore", "nevertheless",
      "nonetheless", "therefore", "thus", "consequently", "additionally",
      "earlier", "later", "recently", "yesterday", "today", "tomorrow",
      "tonight", "still", "yet", "instead", "indeed", "overall",
      "elsewhere", "last", "this", "next", "again", "now", "then",
      "soon", "already", "also", "so", "first", "second", "finally",
      "initially", "originally", "separately", "similarly", "likewise",
      "unsurprisingly", "crucially", "importantly", "notably",
  });
  return set;
}

const std::unordered_set<std::string>& common_verbs() {
  static const auto set = make_set({
      "is", "are", "was", "were", "be", "been", "being", "am", "has",
      "have", "had", "do", "does", "did", "will", "would", "can",
      "could", "may", "might", "must", "shall", "should", "said",
      "says", "say", "told", "rose", "fell", "won", "lost", "beat",
      "made", "makes", "make", "led", "leads", "lead", "took", "takes",
      "take", "got", "gets", "get", "went", "goes", "go", "came",
      "comes", "come", "ran", "runs", "run", "saw", "sees", "see",
      "showed", "shows", "show", "gave", "gives", "give", "found",
      "finds", "find", "held", "holds", "hold", "kept", "keeps",
      "keep", "met", "meets", "meet", "paid", "pays", "pay", "set",
      "sets", "put", "puts", "cut", "cuts", "hit", "hits", "let",
      "lets", "begins", "began", "begin", "ends", "ended", "end",
      "opens", "opened", "open", "grew", "grows", "grow", "knew",
      "knows", "know", "thought", "thinks", "think", "felt", "feels",
      "feel", "left", "leaves", "leave", "brought", "brings", "bring",
      "bought", "buys", "buy", "sold", "sells", "sell", "sent",
      "sends", "send", "built", "builds", "build", "spent", "spends",
      "spend", "wins", "win", "loses", "lose", "faces", "faced",
      "face", "plans", "planned", "plan", "expects", "expected",
      "expect", "wants", "wanted", "want", "needs", "needed", "need",
      "seeks", "sought", "seek", "warns", "warned", "warn", "calls",
      "called", "call", "urges", "urged", "urge", "backs", "backed",
      "back", "signs", "signed", "sign", "joins", "joined", "join",
      "quits", "quit", "returns", "returned", "return", "remains",
      "remained", "remain", "becomes", "became", "become", "continues",
      "continued", "continue", "launches", "launched", "launch",
      "reveals", "revealed", "reveal", "unveils", "unveiled", "unveil",
      "announces", "announced", "announce", "reports", "reported",
      "report", "claims", "claimed", "claim", "denies", "denied",
      "deny", "admits", "admitted", "admit", "agrees", "agreed",
      "agree", "rejects", "rejected", "reject", "accepts", "accepted",
      "accept", "offers", "offered", "offer", "raises", "raised",
      "raise", "drops", "dropped", "drop", "falls", "fall", "rises",
      "rise", "climbs", "climbed", "climb", "jumps", "jumped", "jump",
      "slips", "slipped", "slip", "surges", "surged", "surge",
  });
  return set;
}

}  // namespace ndorgs
