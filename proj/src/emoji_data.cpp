// Copyright 2026 The tweetpiece Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tweetpiece/emoji_data.hpp"

namespace tweetpiece {

namespace {

struct Entry {
  const char* emoji;
  const char* alias;
};

// Common emoji in Twitter data. Not exhaustive; unknown emoji still get
// wrapped by the replacement tokens, just without an alias.
constexpr Entry kEntries[] = {
    // Smileys.
    {"\U0001F600", "grinning face"},
    {"\U0001F601", "beaming face with smiling eyes"},
    {"\U0001F602", "face with tears of joy"},
    {"\U0001F603", "grinning face with big eyes"},
    {"\U0001F604", "grinning face with smiling eyes"},
    {"\U0001F605", "grinning face with sweat"},
    {"\U0001F606", "grinning squinting face"},
    {"\U0001F607", "smiling face with halo"},
    {"\U0001F608", "smiling face with horns"},
    {"\U0001F609", "winking face"},
    {"\U0001F60A", "smiling face with smiling eyes"},
    {"\U0001F60B", "face savoring food"},
    {"\U0001F60C", "relieved face"},
    {"\U0001F60D", "smiling face with heart eyes"},
    {"\U0001F60E", "smiling face with sunglasses"},
    {"\U0001F60F", "smirking face"},
    {"\U0001F610", "neutral face"},
    {"\U0001F611", "expressionless face"},
    {"\U0001F612", "unamused face"},
    {"\U0001F613", "downcast face with sweat"},
    {"\U0001F614", "pensive face"},
    {"\U0001F615", "confused face"},
    {"\U0001F616", "confounded face"},
    {"\U0001F617", "kissing face"},
    {"\U0001F618", "face blowing a kiss"},
    {"\U0001F619", "kissing face with smiling eyes"},
    {"\U0001F61A", "kissing face with closed eyes"},
    {"\U0001F61B", "face with tongue"},
    {"\U0001F61C", "winking face with tongue"},
    {"\U0001F61D", "squinting face with tongue"},
    {"\U0001F61E", "disappointed face"},
    {"\U0001F61F", "worried face"},
    {"\U0001F620", "angry face"},
    {"\U0001F621", "pouting face"},
    {"\U0001F622", "crying face"},
    {"\U0001F623", "persevering face"},
    {"\U0001F624", "face with steam from nose"},
    {"\U0001F625", "sad but relieved face"},
    {"\U0001F628", "fearful face"},
    {"\U0001F629", "weary face"},
    {"\U0001F62A", "sleepy face"},
    {"\U0001F62B", "tired face"},
    {"\U0001F62C", "grimacing face"},
    {"\U0001F62D", "loudly crying face"},
    {"\U0001F62E", "face with open mouth"},
    {"\U0001F62F", "hushed face"},
    {"\U0001F630", "anxious face with sweat"},
    {"\U0001F631", "face screaming in fear"},
    {"\U0001F632", "astonished face"},
    {"\U0001F633", "flushed face"},
    {"\U0001F634", "sleeping face"},
    {"\U0001F635", "face with crossed out eyes"},
    {"\U0001F637", "face with medical mask"},
    {"\U0001F641", "slightly frowning face"},
    {"\U0001F642", "slightly smiling face"},
    {"\U0001F643", "upside down face"},
    {"\U0001F644", "face with rolling eyes"},
    {"\U0001F910", "zipper mouth face"},
    {"\U0001F911", "money mouth face"},
    {"\U0001F912", "face with thermometer"},
    {"\U0001F913", "nerd face"},
    {"\U0001F914", "thinking face"},
    {"\U0001F915", "face with head bandage"},
    {"\U0001F917", "smiling face with open hands"},
    {"\U0001F920", "cowboy hat face"},
    {"\U0001F921", "clown face"},
    {"\U0001F922", "nauseated face"},
    {"\U0001F923", "rolling on the floor laughing"},
    {"\U0001F924", "drooling face"},
    {"\U0001F925", "lying face"},
    {"\U0001F927", "sneezing face"},
    {"\U0001F928", "face with raised eyebrow"},
    {"\U0001F929", "star struck"},
    {"\U0001F92A", "zany face"},
    {"\U0001F92B", "shushing face"},
    {"\U0001F92C", "face with symbols on mouth"},
    {"\U0001F92D", "face with hand over mouth"},
    {"\U0001F92E", "face vomiting"},
    {"\U0001F92F", "exploding head"},
    {"\U0001F970", "smiling face with hearts"},
    {"\U0001F971", "yawning face"},
    {"\U0001F972", "smiling face with tear"},
    {"\U0001F973", "partying face"},
    {"\U0001F974", "woozy face"},
    {"\U0001F975", "hot face"},
    {"\U0001F976", "cold face"},
    {"\U0001F97A", "pleading face"},
    {"\U0001FAE0", "melting face"},
    {"\U0001F480", "skull"},
    {"\U0001F4A9", "pile of poo"},
    {"\U0001F47B", "ghost"},
    {"\U0001F47D", "alien"},
    {"\U0001F916", "robot"},
    // Hearts and symbols.
    {"❤️", "red heart"},
    {"❤", "red heart"},
    {"\U0001F9E1", "orange heart"},
    {"\U0001F49B", "yellow heart"},
    {"\U0001F49A", "green heart"},
    {"\U0001F499", "blue heart"},
    {"\U0001F49C", "purple heart"},
    {"\U0001F5A4", "black heart"},
    {"\U0001F90D", "white heart"},
    {"\U0001F90E", "brown heart"},
    {"\U0001F494", "broken heart"},
    {"❣️", "heart exclamation"},
    {"\U0001F495", "two hearts"},
    {"\U0001F496", "sparkling heart"},
    {"\U0001F497", "growing heart"},
    {"\U0001F498", "heart with arrow"},
    {"\U0001F49D", "heart with ribbon"},
    {"\U0001F49E", "revolving hearts"},
    {"\U0001F49F", "heart decoration"},
    {"\U0001F4AF", "hundred points"},
    {"\U0001F4A2", "anger symbol"},
    {"\U0001F4A5", "collision"},
    {"\U0001F4A6", "sweat droplets"},
    {"\U0001F4A8", "dashing away"},
    {"\U0001F4AB", "dizzy"},
    {"\U0001F4A4", "zzz"},
    {"⭐", "star"},
    {"\U0001F31F", "glowing star"},
    {"✨", "sparkles"},
    {"\U0001F525", "fire"},
    {"\U0001F389", "party popper"},
    {"\U0001F38A", "confetti ball"},
    {"\U0001F388", "balloon"},
    {"\U0001F381", "wrapped gift"},
    {"\U0001F386", "fireworks"},
    {"⚡", "high voltage"},
    {"\U0001F308", "rainbow"},
    {"☀️", "sun"},
    {"☀", "sun"},
    {"\U0001F319", "crescent moon"},
    {"\U0001F31E", "sun with face"},
    {"⛅", "sun behind cloud"},
    {"☁️", "cloud"},
    {"☁", "cloud"},
    {"\U0001F327️", "cloud with rain"},
    {"\U0001F327", "cloud with rain"},
    {"☔", "umbrella with rain drops"},
    {"❄️", "snowflake"},
    {"❄", "snowflake"},
    {"\U0001F30A", "water wave"},
    // Hands and people.
    {"\U0001F44D", "thumbs up"},
    {"\U0001F44E", "thumbs down"},
    {"\U0001F44C", "ok hand"},
    {"\U0001F44F", "clapping hands"},
    {"\U0001F64C", "raising hands"},
    {"\U0001F64F", "folded hands"},
    {"\U0001F91D", "handshake"},
    {"\U0001F91E", "crossed fingers"},
    {"\U0001F918", "sign of the horns"},
    {"\U0001F919", "call me hand"},
    {"\U0001F44A", "oncoming fist"},
    {"✊", "raised fist"},
    {"✋", "raised hand"},
    {"✌️", "victory hand"},
    {"✌", "victory hand"},
    {"\U0001F44B", "waving hand"},
    {"\U0001F4AA", "flexed biceps"},
    {"\U0001F446", "backhand index pointing up"},
    {"\U0001F447", "backhand index pointing down"},
    {"\U0001F448", "backhand index pointing left"},
    {"\U0001F449", "backhand index pointing right"},
    {"\U0001F645‍♀️", "woman gesturing no"},
    {"\U0001F645‍♂️", "man gesturing no"},
    {"\U0001F645", "person gesturing no"},
    {"\U0001F646‍♀️", "woman gesturing ok"},
    {"\U0001F646‍♂️", "man gesturing ok"},
    {"\U0001F646", "person gesturing ok"},
    {"\U0001F937‍♀️", "woman shrugging"},
    {"\U0001F937‍♂️", "man shrugging"},
    {"\U0001F937", "person shrugging"},
    {"\U0001F926‍♀️", "woman facepalming"},
    {"\U0001F926‍♂️", "man facepalming"},
    {"\U0001F926", "person facepalming"},
    {"\U0001F483", "woman dancing"},
    {"\U0001F57A", "man dancing"},
    {"\U0001F440", "eyes"},
    {"\U0001F442", "ear"},
    {"\U0001F444", "mouth"},
    {"\U0001F445", "tongue"},
    {"\U0001F463", "footprints"},
    {"\U0001F9E0", "brain"},
    // Animals and nature.
    {"\U0001F436", "dog face"},
    {"\U0001F431", "cat face"},
    {"\U0001F408", "cat"},
    {"\U0001F415", "dog"},
    {"\U0001F984", "unicorn"},
    {"\U0001F98B", "butterfly"},
    {"\U0001F40D", "snake"},
    {"\U0001F422", "turtle"},
    {"\U0001F33B", "sunflower"},
    {"\U0001F339", "rose"},
    {"\U0001F33A", "hibiscus"},
    {"\U0001F337", "tulip"},
    {"\U0001F340", "four leaf clover"},
    {"\U0001F331", "seedling"},
    {"\U0001F332", "evergreen tree"},
    {"\U0001F334", "palm tree"},
    {"\U0001F335", "cactus"},
    // Food and drink.
    {"\U0001F355", "pizza"},
    {"\U0001F354", "hamburger"},
    {"\U0001F32E", "taco"},
    {"\U0001F32F", "burrito"},
    {"\U0001F35F", "french fries"},
    {"\U0001F366", "soft ice cream"},
    {"\U0001F370", "shortcake"},
    {"\U0001F382", "birthday cake"},
    {"\U0001F37A", "beer mug"},
    {"\U0001F37B", "clinking beer mugs"},
    {"\U0001F377", "wine glass"},
    {"\U0001F942", "clinking glasses"},
    {"☕", "hot beverage"},
    {"\U0001F9C9", "mate"},
    {"\U0001F34E", "red apple"},
    {"\U0001F34C", "banana"},
    {"\U0001F349", "watermelon"},
    {"\U0001F353", "strawberry"},
    {"\U0001F951", "avocado"},
    // Activities and objects.
    {"⚽", "soccer ball"},
    {"\U0001F3C0", "basketball"},
    {"\U0001F3BE", "tennis"},
    {"\U0001F3C6", "trophy"},
    {"\U0001F947", "first place medal"},
    {"\U0001F3AF", "bullseye"},
    {"\U0001F3AE", "video game"},
    {"\U0001F3B6", "musical notes"},
    {"\U0001F3B5", "musical note"},
    {"\U0001F3A4", "microphone"},
    {"\U0001F3A7", "headphone"},
    {"\U0001F3B8", "guitar"},
    {"\U0001F4F1", "mobile phone"},
    {"\U0001F4BB", "laptop"},
    {"\U0001F4F7", "camera"},
    {"\U0001F4FA", "television"},
    {"\U0001F697", "automobile"},
    {"✈️", "airplane"},
    {"✈", "airplane"},
    {"\U0001F680", "rocket"},
    {"\U0001F6B2", "bicycle"},
    {"\U0001F4B0", "money bag"},
    {"\U0001F4B8", "money with wings"},
    {"\U0001F4DA", "books"},
    {"\U0001F4D6", "open book"},
    {"✏️", "pencil"},
    {"\U0001F4DD", "memo"},
    {"\U0001F4E2", "loudspeaker"},
    {"\U0001F514", "bell"},
    {"\U0001F512", "locked"},
    {"\U0001F511", "key"},
    {"⏰", "alarm clock"},
    {"⌚", "watch"},
    {"\U0001F4C5", "calendar"},
    {"\U0001F6A8", "police car light"},
    {"⚠️", "warning"},
    {"⚠", "warning"},
    {"\U0001F6AB", "prohibited"},
    {"✅", "check mark button"},
    {"❌", "cross mark"},
    {"❓", "question mark"},
    {"❗", "exclamation mark"},
    {"✔️", "check mark"},
    {"✔", "check mark"},
    {"\U0001F522", "input numbers"},
    {"\U0001F4CA", "bar chart"},
    {"\U0001F4C8", "chart increasing"},
    {"\U0001F4C9", "chart decreasing"},
    // Flags (regional indicator pairs).
    {"\U0001F1E6\U0001F1F7", "flag argentina"},
    {"\U0001F1E7\U0001F1F7", "flag brazil"},
    {"\U0001F1E8\U0001F1F1", "flag chile"},
    {"\U0001F1E8\U0001F1F4", "flag colombia"},
    {"\U0001F1E8\U0001F1FA", "flag cuba"},
    {"\U0001F1EA\U0001F1F8", "flag spain"},
    {"\U0001F1F2\U0001F1FD", "flag mexico"},
    {"\U0001F1F5\U0001F1EA", "flag peru"},
    {"\U0001F1FA\U0001F1F8", "flag united states"},
    {"\U0001F1FA\U0001F1FE", "flag uruguay"},
    {"\U0001F1FB\U0001F1EA", "flag venezuela"},
    {"\U0001F1EC\U0001F1E7", "flag united kingdom"},
};

}  // namespace

const std::map<std::string, std::string>& bundled_emoji_aliases() {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    for (const auto& e : kEntries) t.emplace(e.emoji, e.alias);
    return t;
  }();
  return table;
}

}  // namespace tweetpiece
