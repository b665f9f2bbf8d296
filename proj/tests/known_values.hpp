#pragma once

// Frozen reference values for the solution lineage of
//   x^2 + y^2 = z^2 = e^4,  x + y = f^2:
// the classical seed (-119, 120, 169), the triangle Fermat announced to
// Mersenne, and the solutions reachable from them through the two
// closed-form branches. Shared by the unit and acceptance suites; every
// value is also recomputed by at least one independent route somewhere in
// the tests.

namespace known {

// Seed: the smallest negative-arm solution.
inline constexpr long kSeedX = -119;
inline constexpr long kSeedY = 120;
inline constexpr long kSeedZ = 169;
inline constexpr long kSeedE = 13;
inline constexpr long kSeedF = 1;

// Step 1, first branch: Fermat's triangle.
inline constexpr const char* kStep1T = "2048075/20566";
inline constexpr const char* kStep1X = "4565486027761";
inline constexpr const char* kStep1Y = "1061652293520";
inline constexpr const char* kStep1Z = "4687298610289";
inline constexpr const char* kStep1E = "2165017";
inline constexpr const char* kStep1F = "2372159";

// Step 1, second branch: a negative solution.
inline constexpr const char* kNeg1T = "-1582/13";
inline constexpr const char* kNeg1X = "2276953";
inline constexpr const char* kNeg1Y = "-473304";
inline constexpr const char* kNeg1Z = "2325625";
inline constexpr const char* kNeg1E = "1525";
inline constexpr const char* kNeg1F = "1343";

// System extracted from the negative solution above (generators 1517, -156).
inline constexpr long kSys2A = 2722;
inline constexpr long kSys2B = 3034;
inline constexpr long kSys2C = 1343;
inline constexpr long kSys2D = 1525;

// First branch from that system: still negative, already primitive.
inline constexpr const char* kNeg1Branch1T =
    "-6620057924551204/9320377661925";
inline constexpr const char* kNeg1Branch1X =
    "54420629434406206268103685648441";
inline constexpr const char* kNeg1Branch1Y =
    "-21864804036399372236043874332600";
inline constexpr const char* kNeg1Branch1SqrtZ = "7658246457672229";
inline constexpr const char* kNeg1Branch1SqrtSum = "5705771236038721";

// Second branch from that system: raw arms share the factor 169.
inline constexpr const char* kNeg1Branch2T = "-5135764561703/3240054650";
inline constexpr const char* kNeg1Branch2RawX = "-206813120469783031691591";
inline constexpr const char* kNeg1Branch2RawY = "223005565123008949772400";
inline constexpr long kNeg1Branch2Lambda = 169;
inline constexpr const char* kNeg1Branch2SqrtRawZ = "551491888597";
inline constexpr const char* kNeg1Branch2SqrtRawSum = "127249536947";

// System extracted from Fermat's triangle (generators 2150905, 246792).
inline constexpr long kSys3A = 4795394;
inline constexpr long kSys3B = 4301810;
inline constexpr const char* kSys3C = "2372159";
inline constexpr const char* kSys3D = "2165017";

// Step 2, first branch: the second positive primitive.
inline constexpr const char* kStep2T =
    "-26417915836091201852959675/23371832231633450697";
inline constexpr const char* kStep2RawX =
    "535680495873241092745209200472728654679243416759524";
inline constexpr const char* kStep2RawY =
    "275163562553703711131840159506694122064526245693280";
inline constexpr const char* kStep2SqrtRawZ = "24540165251772609623297974";
inline constexpr const char* kStep2SqrtRawSum = "28475323675543089493990702";
inline constexpr long kStep2Lambda = 2502724;
inline constexpr const char* kStep2X =
    "214038981475081188634947041892245670988588201";
inline constexpr const char* kStep2Y =
    "109945628264924023237017010068507003594693720";
inline constexpr const char* kStep2Z =
    "240625698472667313160415295005368384723483849";
inline constexpr const char* kStep2E = "15512114571284835412957";
inline constexpr const char* kStep2F = "17999572487701067948161";

// Step 2, second branch: negative, raw arms share the factor 169.
inline constexpr const char* kStep2NegT =
    "-43696202356681630705292570379109/21491187664558271841998066";
inline constexpr const char* kStep2NegRawX =
    "-21733496857139479252342798266058042991635616764351673608324343";
inline constexpr const char* kStep2NegRawY =
    "26830078589973982647877216088059498465111507506193928641585824";
inline constexpr const char* kStep2NegSqrtRawZ =
    "5876071849672554975815554150525";
inline constexpr const char* kStep2NegSqrtRawSum =
    "2257561014199727757943672268941";
inline constexpr long kStep2NegLambda = 169;
inline constexpr const char* kStep2NegX =
    "-128600573119168516286052060745905579832163412806814636735647";
inline constexpr const char* kStep2NegY =
    "158757861479135991999273467976683422870482292936058749358496";
inline constexpr const char* kStep2NegZ =
    "204308996346238115515039274058960844791420732521825765430625";
inline constexpr const char* kStep2NegE = "452005526897888844293504165425";
inline constexpr const char* kStep2NegF = "173658539553825212149513251457";

// Quartic chain. (3, 2) is the state below the seed: its triple is the
// seed triangle, and completing its quartic yields T = 1343/84, hence the
// fixed seed 1469/84.
inline constexpr const char* kQPre[4] = {"10/1", "51/2", "37/2", "1/16"};
inline constexpr const char* kQPreT = "1343/84";

inline constexpr const char* kQ2A = "1553/21";
inline constexpr const char* kQ2B = "2397697/1176";
inline constexpr const char* kQ2C = "3682162385/148176";
inline constexpr const char* kQ2D = "5627138321281/49787136";
inline constexpr const char* kQ2Beta = "2372159/7056";
inline constexpr const char* kQ2Alpha = "3682162385/99630678";
inline constexpr const char* kQ2T = "-5632732605275/619105033092";
inline constexpr const char* kQ2t = "123672266091/14740596026";
inline constexpr const char* kQ2R = "123672266091";
inline constexpr const char* kQ2S = "14740596026";
inline constexpr const char* kQ2P = "15077544228881381427605";
inline constexpr const char* kQ2Q = "3646005828134818308732";

inline constexpr const char* kQ3A = "276825724234/7370298013";
inline constexpr const char* kQ3B =
    "56170650171048599209011/108642585600863496338";
inline constexpr const char* kQ3C =
    "2484091554340576859033091015047365/800728232781226638144194176394";
inline constexpr const char* kQ3D =
    "323984609740005211871964051960752674583281921/"
    "47212845624163809238534594766102957640976";
inline constexpr const char* kQ3Beta =
    "17999572487701067948161/217285171201726992676";
inline constexpr const char* kQ3Alpha =
    "2484091554340576859033091015047365/132662213340952648036309005304093";
inline constexpr const char* kQ3T =
    "-437825148963391521638828389137484882137402791039/"
    "98896159763542844418246069612877176065621596668";
inline constexpr const char* kQ3R =
    "165210121963111493378119359635452016808461";
inline constexpr const char* kQ3S =
    "41690358767495283586912205131644706811652";
inline constexpr const char* kQ3P =
    "2555629838490370378141454677149214109425928622015868323491"
    "7545002092786780958219417";
inline constexpr const char* kQ3Q =
    "1377533851332754072071006726432564262260558482357302220333"
    "7181166391614008173975144";
inline constexpr const char* kQ3SqrtZ =
    "290324704132286455037121432138325355009852271302457916"
    "25262982715784415755764157625";
inline constexpr const char* kQ3SqrtSum =
    "3416808099353511355218046491734686829295873999139"
    "8355562578195440360113112814117057";

// First five rows of the two families: {index, u, v, x, y, z, square_value}.
inline constexpr const char* kSumSquareRows[5][7] = {
    {"1", "1", "1", "1", "0", "1", "1"},
    {"2", "7", "5", "9", "40", "41", "7"},
    {"3", "41", "29", "57", "1624", "1625", "41"},
    {"4", "239", "169", "337", "56784", "56785", "239"},
    {"5", "1393", "985", "1969", "1938480", "1938481", "1393"},
};

inline constexpr const char* kHypSquareRows[5][7] = {
    {"1", "1", "1", "1", "0", "1", "1"},
    {"2", "7", "5", "7", "24", "25", "5"},
    {"3", "41", "29", "41", "840", "841", "29"},
    {"4", "239", "169", "239", "28560", "28561", "169"},
    {"5", "1393", "985", "1393", "970224", "970225", "985"},
};

// (u_k, v_k) for k = 1..10, from iterating u' = u + 2v, v' = u + v.
inline constexpr const char* kPellTable[10][2] = {
    {"1", "1"},     {"3", "2"},     {"7", "5"},    {"17", "12"},
    {"41", "29"},   {"99", "70"},   {"239", "169"}, {"577", "408"},
    {"1393", "985"}, {"3363", "2378"},
};

}  // namespace known
