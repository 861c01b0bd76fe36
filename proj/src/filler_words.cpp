#include "kwclass/corpusgen.hpp"

namespace kwclass {

namespace {

// Fixed filler vocabulary for synthetic corpora: 1000 common English
// words, alphabetical, deliberately free of contract/crime terms so keyword
// pools stay disjoint from it.
constexpr std::string_view kFillerWords[] = {
    "able", "above", "accept", "across", "add", "admire", "afternoon", "against", "age", "agree",
    "airport", "alarm", "alike", "all", "almost", "along", "already", "also", "among", "angle",
    "angry", "ankle", "annual", "another", "ant", "anyone", "anywhere", "apart", "appear", "april",
    "arch", "argue", "arm", "army", "arrange", "arrow", "art", "artist", "asleep", "atlas",
    "attend", "aunt", "autumn", "average", "awake", "away", "baby", "bad", "badge", "bake", "ball",
    "balloon", "band", "bar", "barely", "base", "basket", "bat", "battery", "bay", "beach", "bear",
    "beat", "beautiful", "become", "bee", "beef", "begin", "behind", "believe", "belong", "belt",
    "bend", "beneath", "beside", "better", "between", "bicycle", "bird", "birth", "bit", "bitter",
    "black", "blame", "blast", "blind", "blood", "blow", "blue", "boat", "boil", "bold", "book",
    "border", "boring", "both", "bottom", "bounce", "bowl", "boy", "brain", "brass", "bread",
    "break", "breath", "breeze", "brick", "brief", "bring", "broad", "brown", "bubble", "bucket",
    "bulb", "burn", "burst", "bush", "butter", "button", "cabin", "cake", "call", "calm", "camp",
    "candle", "candy", "cap", "captain", "car", "care", "carpet", "carrot", "cart", "castle",
    "cat", "cattle", "cave", "ceiling", "cellar", "century", "certain", "chair", "chance",
    "change", "chart", "cheap", "check", "cheer", "cherry", "chest", "chief", "chimney", "chin",
    "choose", "city", "clap", "clay", "clear", "clever", "climate", "clock", "close", "cloud",
    "club", "coach", "coast", "coffee", "cold", "collect", "color", "come", "comfort", "company",
    "compass", "complete", "concert", "consider", "contain", "cook", "copper", "copy", "corner",
    "cotton", "couch", "could", "country", "courage", "cover", "crack", "craft", "crawl", "crazy",
    "cream", "creek", "cricket", "crisp", "cross", "crown", "cruel", "crush", "cup", "cupboard",
    "curl", "curtain", "curve", "customer", "cycle", "daily", "danger", "dark", "date", "dawn",
    "dead", "deaf", "dear", "decide", "decorate", "deep", "degree", "deliver", "demand", "dentist",
    "depth", "describe", "design", "dessert", "destroy", "develop", "dew", "diagram", "diary",
    "dim", "dinner", "dirt", "discover", "discuss", "distance", "divide", "dizzy", "doctor",
    "doll", "dolphin", "door", "double", "doubt", "down", "drag", "dragon", "draw", "dress",
    "drift", "drink", "drive", "drop", "dry", "dull", "dump", "dust", "each", "eager", "ear",
    "earn", "east", "easy", "echo", "effect", "effort", "eight", "elbow", "electric", "eleven",
    "empty", "end", "energy", "enjoy", "enough", "entire", "equal", "erase", "even", "event",
    "ever", "everybody", "everything", "everywhere", "example", "excite", "excuse", "exit",
    "explain", "explore", "eye", "fact", "factory", "fail", "fall", "family", "fan", "farm",
    "farmer", "fasten", "father", "fault", "fear", "feather", "february", "feel", "felt", "fence",
    "fetch", "few", "fierce", "fifth", "fight", "fill", "film", "find", "finish", "fire", "first",
    "fist", "fit", "fix", "flame", "flash", "flavor", "float", "flock", "floor", "flow", "flower",
    "foam", "fold", "follow", "food", "foot", "forest", "forget", "form", "fortune", "fountain",
    "fox", "frame", "freeze", "friday", "friend", "from", "frost", "frown", "fry", "fun", "funny",
    "furniture", "gain", "game", "garden", "gate", "gaze", "general", "geography", "gift",
    "giggle", "giraffe", "give", "glad", "globe", "glow", "glue", "goat", "good", "goose", "grade",
    "grand", "grape", "gray", "green", "greet", "grind", "groan", "ground", "grow", "guess",
    "guest", "gulf", "hair", "half", "hammer", "handle", "hang", "happy", "hard", "harvest",
    "hate", "hawk", "hay", "health", "hear", "heart", "heavy", "heel", "height", "help", "her",
    "here", "hide", "hill", "hip", "hire", "history", "hobby", "hold", "hollow", "honey", "hook",
    "hope", "horse", "hospital", "hot", "hour", "house", "huge", "human", "humble", "hungry",
    "hurry", "hurt", "ice", "image", "imagine", "inch", "index", "indoor", "ink", "inside",
    "instant", "into", "invite", "iron", "itself", "january", "jar", "jelly", "job", "join",
    "journey", "juice", "july", "june", "just", "keep", "key", "kid", "king", "kitchen", "kitten",
    "kneel", "knife", "knot", "label", "ladder", "lake", "land", "language", "large", "late",
    "laugh", "lawn", "lazy", "lead", "lean", "learn", "least", "leave", "leg", "lemon", "length",
    "let", "letter", "library", "lie", "life", "light", "limb", "line", "lip", "listen", "little",
    "lizard", "loaf", "local", "log", "long", "look", "loose", "loud", "love", "lucky", "lunch",
    "machine", "magic", "mail", "make", "man", "manner", "map", "marble", "mark", "marry", "mask",
    "master", "match", "matter", "maybe", "meal", "mean", "meat", "meet", "melt", "memory",
    "mention", "menu", "message", "method", "middle", "mild", "milk", "mill", "mine", "mirror",
    "miss", "mix", "modern", "moment", "money", "month", "moon", "morning", "mother", "motion",
    "mouse", "move", "much", "mug", "must", "myself", "name", "nature", "near", "neck", "needle",
    "neither", "nest", "never", "news", "next", "night", "nobody", "nod", "none", "north", "nose",
    "nothing", "november", "now", "nurse", "oak", "ocean", "odd", "off", "often", "old", "onion",
    "only", "orange", "order", "ordinary", "our", "outdoor", "outside", "over", "owner", "pack",
    "page", "paint", "pair", "pale", "pan", "pancake", "parade", "parent", "park", "party", "past",
    "paste", "path", "pause", "peace", "peach", "peanut", "pebble", "peel", "pencil", "people",
    "pepper", "perhaps", "pet", "phone", "piano", "picnic", "picture", "piece", "pile", "pillow",
    "pin", "pink", "pipe", "pity", "plain", "plan", "planet", "plate", "play", "please", "plow",
    "pocket", "point", "polish", "polite", "pony", "poor", "pop", "porch", "pot", "potato",
    "powder", "practice", "prepare", "pretty", "pride", "prince", "print", "probably", "problem",
    "project", "proper", "prove", "provide", "puddle", "pump", "pumpkin", "pupil", "pure",
    "purple", "push", "puzzle", "quarter", "question", "quiet", "quilt", "rabbit", "radio", "rail",
    "rainbow", "rake", "ranch", "rapid", "rather", "raw", "read", "real", "reason", "recognize",
    "red", "reflect", "region", "remain", "remember", "remove", "repeat", "reply", "rescue",
    "return", "review", "rhythm", "rice", "rich", "ridge", "ring", "ripe", "river", "roar", "rock",
    "rocket", "roof", "root", "rope", "rough", "route", "row", "rub", "rude", "rug", "run", "sad",
    "saddle", "sail", "salt", "same", "sandwich", "sauce", "save", "say", "scare", "scarf",
    "school", "scissors", "score", "scratch", "screen", "sea", "search", "seat", "second", "see",
    "seek", "seem", "sell", "sense", "september", "set", "seven", "several", "shade", "shake",
    "shall", "share", "she", "sheep", "shelf", "shine", "shirt", "shoe", "shop", "short",
    "shoulder", "shovel", "shower", "shut", "sick", "sigh", "sight", "signal", "silk", "silly",
    "simple", "sing", "sink", "sit", "size", "skate", "ski", "skin", "skip", "sky", "sleep",
    "sleeve", "slide", "slip", "slope", "small", "smell", "smile", "smooth", "snail", "snake",
    "sneeze", "so", "soap", "sock", "soil", "soldier", "solve", "somebody", "someone", "sometimes",
    "son", "soon", "sorry", "sound", "sour", "south", "spare", "sparrow", "speak", "speed",
    "spend", "spice", "spill", "spirit", "splash", "spoon", "spot", "spray", "spring", "square",
    "squeeze", "stable", "stadium", "stage", "stamp", "star", "stare", "state", "stay", "steady",
    "steam", "steep", "stem", "stick", "still", "sting", "stitch", "stone", "stop", "storm",
    "stove", "straight", "straw", "street", "stretch", "string", "strong", "student", "stuff",
    "subject", "sudden", "sugar", "summer", "sunday", "sunny", "supper", "suppose", "sure",
    "surprise", "swan", "sweater", "sweet", "swift", "swim", "switch", "tail", "take", "talk",
    "tame", "tank", "taste", "taxi", "tea", "teacher", "tear", "telephone", "temperature",
    "tennis", "tent", "than", "that", "theater", "theme", "there", "these", "thick", "thin",
    "thing", "third", "thirteen", "this", "those", "thousand", "thread", "throat", "throw",
    "thunder", "thursday", "ticket", "tide", "tie", "tight", "tiny", "tip", "tired", "to", "toad",
    "today", "together", "tomato", "tone", "tonight", "too", "tooth", "torch", "toss", "touch",
    "towel", "tower", "toy", "tractor", "trade", "trail", "travel", "tray", "treat", "tremble",
    "trick", "trouble", "true", "trumpet", "trust", "tube", "tuesday", "tunnel", "turn", "turtle",
    "twenty", "twig", "twin", "two", "ugly", "umbrella", "under", "unit", "unusual", "up", "upper",
    "upstairs", "use", "usual", "value", "van", "vase", "very", "vest", "village", "visit",
    "voice", "vote", "wagon", "waist", "wake", "wall", "walnut", "want", "warm", "wash", "watch",
    "wave", "way", "wear", "weave", "wednesday", "weigh", "well", "west", "whale", "wheat",
    "wheel", "where", "while", "whisper", "white", "whole", "whose", "wide", "wild", "will",
    "wind", "wing", "wipe", "wise", "with", "without", "wolf", "wonder", "wool", "word", "world",
    "worry", "worth", "wreck", "write", "wrong", "yarn", "year", "yell", "yes", "yet", "you",
    "yourself", "zero", "zigzag", "zoo",
};

}  // namespace

std::span<const std::string_view> filler_words() { return kFillerWords; }

}  // namespace kwclass
