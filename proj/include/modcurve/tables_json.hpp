#pragma once

#include <cstdint>

// Embedded machine-readable catalog: the 220 genus-0 and 28 genus-1 group
// records plus the 7 Weierstrass models, as one canonical JSON document.
// catalog_checksum() is the FNV-1a64 of the exact byte string and is
// re-verified on load.

namespace modcurve::data {

inline constexpr std::uint64_t kCatalogChecksum = 0x642f1a406bf6bfe1ULL;

inline const char* catalog_json() {
  static const char* const text =
    R"json({"curves":[{"a1":0,"a2":-1,"a3":1,"a4":-7,"a6":10,"label":"121b1"},{"a1":0,"a2":1,"a3":0,"a4":1,"a6":1,"label":"128a1"},{"a1":0,"a2":1,"a3":0,"a4":-9,"a6":7,"label":"128a2"},{"a1":0,"a2":1,"a3":0,"a4":-3,"a6":1,"label":"256a1"},{"a1":0,"a2":1,"a3":0,"a4":-13,"a6":-21,"label":"256a2"},{"a1":0,"a2":0,"a3":0,"a4":-2,"a6":0,"label":"256b1"},{"a1":0,"a2":0,"a3":0,"a4":8,"a6":0,"label":"256b2"}],"genus0":[{"gens":[],"genus":0,"index":1,"label":"1A0-1a","level":1,"maps":[],"sups":[]},{"gens":[[[0,1],[2,0]],[[1,1],[1,2]],[[1,0],[0,2]]],"genus":0,"index":3,"label":"3A0-3a","level":3,"maps":[{"den":["1"],"num":["0","0","0","1"]}],"sups":["1A0-1a"]},{"gens":[[[0,1],[2,1]],[[1,2],[0,2]]],"genus":0,"index":4,"label":"3B0-3a","level":3,"maps":[{"den":["0","1"],"num":["729","756","270","36","1"]}],"sups":["1A0-1a"]},{"gens":[[[0,1],[2,0]],[[1,0],[0,2]]],"genus":0,"index":6,"label":"3C0-3a","level":3,"maps":[{"den":["0","1"],"num":["-27","-6","1"]}],"sups":["3A0-3a"]},{"gens":[[[2,0],[0,2]],[[1,0],[0,2]]],"genus":0,"index":12,"label":"3D0-3a","level":3,"maps":[{"den":["-27","0","0","1"],"num":["729"]},{"den":["9","3","1"],"num":["81","-27"]}],"sups":["3B0-3a","3C0-3a"]},{"gens":[[[0,2],[4,0]],[[1,1],[4,5]],[[1,0],[0,2]]],"genus":0,"index":9,"label":"9A0-9a","level":9,"maps":[{"den":["1"],"num":["-6","9","0","1"]}],"sups":["3A0-3a"]},{"gens":[[[1,1],[0,1]],[[2,0],[0,5]],[[1,0],[0,2]]],"genus":0,"index":12,"label":"9B0-9a","level":9,"maps":[{"den":["1"],"num":["0","27","9","1"]}],"sups":["3B0-3a"]},{"gens":[[[2,0],[0,5]],[[4,2],[3,4]],[[1,0],[0,2]]],"genus":0,"index":12,"label":"9C0-9a","level":9,"maps":[{"den":["1"],"num":["0","0","0","1"]}],"sups":["3B0-3a"]},{"gens":[[[2,0],[0,5]],[[1,3],[3,1]],[[0,2],[4,0]],[[1,0],[0,2]]],"genus":0,"index":18,"label":"9D0-9a","level":9,"maps":[{"den":["0","0","0","1"],"num":["-27"]},{"den":["0","1"],"num":["-3","0","1"]}],"sups":["3C0-3a","9A0-9a"]},{"gens":[[[1,3],[0,1]],[[2,1],[1,1]],[[4,2],[0,5]]],"genus":0,"index":18,"label":"9E0-9a","level":9,"maps":[{"den":["0","0","0","8"],"num":["27","81","-27","-9"]}],"sups":["3C0-3a"]},{"gens":[[[0,2],[4,1]],[[4,3],[5,4]],[[4,5],[0,5]]],"genus":0,"index":27,"label":"9F0-9a","level":9,"maps":[{"den":["-1","-27","-324","-2259","-9990","-28350","-47664","-28458","56619","130089","56916","-113319","-138474","21438","111132","27342","-49518","-23814","13524","9450","-2268","-2232","216","324","-9","-27","0","1"],"num":["44789760","127650816","-50388480","-441599040","-140877792","683052588","366184719","-718783794","-466697052","579371292","451829826","-319730652","-317110626","116733312","170684415","-19372446","-76133844","-15011568","20236311","10064574","-2952450","-3612924","-301806","997272","691092","236196","45927","4374"]}],"sups":["1A0-1a"]},{"gens":[[[0,4],[2,3]],[[5,1],[1,4]],[[5,3],[0,4]]],"genus":0,"index":27,"label":"9G0-9a","level":9,"maps":[{"den":["-27","0","81","27","-81","-54","18","27","9","1"],"num":["-324","-2187","-3402","-1863","486","1296","702","81","-54","-15"]}],"sups":["3A0-3a"]},{"gens":[[[1,3],[0,1]],[[5,0],[3,2]],[[1,0],[2,2]]],"genus":0,"index":36,"label":"9H0-9a","level":9,"maps":[{"den":["0","0","0","1"],"num":["27","0","0","3"]},{"den":["6","-3","2"],"num":["0","3"]}],"sups":["3D0-3a","9E0-9a"]},{"gens":[[[1,3],[0,1]],[[5,0],[3,2]],[[2,1],[0,1]]],"genus":0,"index":36,"label":"9H0-9b","level":9,"maps":[{"den":["9","-9","-9","1"],"num":["-27","-27","27","3"]}],"sups":["3D0-3a"]},{"gens":[[[1,3],[0,1]],[[5,0],[3,2]],[[4,2],[0,5]]],"genus":0,"index":36,"label":"9H0-9c","level":9,"maps":[{"den":["-9","-9","9","1"],"num":["0","54","0","-6"]},{"den":["3","8","1"],"num":["-3","0","-1"]}],"sups":["3D0-3a","9E0-9a"]},{"gens":[[[2,1],[0,5]],[[1,2],[3,2]]],"genus":0,"index":36,"label":"9I0-9a","level":9,"maps":[{"den":["3","-9","-3","1"],"num":["0","54","0","-6"]}],"sups":["9B0-9a"]},{"gens":[[[2,1],[0,5]],[[4,0],[3,5]]],"genus":0,"index":36,"label":"9I0-9b","level":9,"maps":[{"den":["-3","-9","3","1"],"num":["27","27","-27","-3"]}],"sups":["9B)json"
    R"json(0-9a"]},{"gens":[[[2,2],[0,5]],[[2,2],[3,1]]],"genus":0,"index":36,"label":"9I0-9c","level":9,"maps":[{"den":["0","-1","1"],"num":["1","3","-6","1"]}],"sups":["9B0-9a"]},{"gens":[[[1,3],[0,1]],[[2,2],[3,8]],[[1,2],[0,2]]],"genus":0,"index":36,"label":"9J0-9a","level":9,"maps":[{"den":["0","-1","1"],"num":["1","-3","0","1"]}],"sups":["9C0-9a"]},{"gens":[[[1,3],[0,1]],[[2,2],[3,8]],[[2,1],[0,1]]],"genus":0,"index":36,"label":"9J0-9b","level":9,"maps":[{"den":["3","-9","-3","1"],"num":["18","0","-18"]}],"sups":["9C0-9a"]},{"gens":[[[1,3],[0,1]],[[5,2],[3,5]],[[4,0],[0,5]]],"genus":0,"index":36,"label":"9J0-9c","level":9,"maps":[{"den":["3","-9","-3","1"],"num":["-9","-27","9","3"]}],"sups":["9C0-9a"]},{"gens":[[[1,1],[0,1]],[[2,1],[9,5]],[[1,2],[3,2]]],"genus":0,"index":36,"label":"27A0-27a","level":27,"maps":[{"den":["1"],"num":["0","0","0","1"]}],"sups":["9B0-9a"]},{"gens":[[[2,1],[0,3]],[[1,2],[2,0]],[[1,1],[0,2]]],"genus":0,"index":5,"label":"5A0-5a","level":5,"maps":[{"den":["1"],"num":["0","0","0","40","5","1"]}],"sups":["1A0-1a"]},{"gens":[[[2,0],[0,3]],[[1,0],[1,1]],[[1,0],[0,2]]],"genus":0,"index":6,"label":"5B0-5a","level":5,"maps":[{"den":["0","1"],"num":["125","750","1575","1300","315","30","1"]}],"sups":["1A0-1a"]},{"gens":[[[3,1],[0,2]],[[1,2],[2,0]],[[2,2],[2,1]]],"genus":0,"index":10,"label":"5C0-5a","level":5,"maps":[{"den":["-3125","0","3125","0","-1250","0","250","0","-25","0","1"],"num":["0","0","0","8000000","-4000000","-3600000","5000000","-2560000","720000","-112000","8000"]}],"sups":["1A0-1a"]},{"gens":[[[4,0],[1,4]],[[1,0],[0,2]]],"genus":0,"index":12,"label":"5D0-5a","level":5,"maps":[{"den":["-1","-11","1"],"num":["0","125"]}],"sups":["5B0-5a"]},{"gens":[[[4,0],[1,4]],[[2,0],[0,1]]],"genus":0,"index":12,"label":"5D0-5b","level":5,"maps":[{"den":["0","1"],"num":["-1","-11","1"]}],"sups":["5B0-5a"]},{"gens":[[[2,1],[0,3]],[[2,0],[2,3]],[[1,0],[2,2]]],"genus":0,"index":15,"label":"5E0-5a","level":5,"maps":[{"den":["5","5","1"],"num":["-25","-5","5","1"]}],"sups":["5A0-5a"]},{"gens":[[[3,1],[0,2]],[[2,1],[0,1]]],"genus":0,"index":30,"label":"5G0-5a","level":5,"maps":[{"den":["0","25","25","15","5","1"],"num":["125"]},{"den":["0","1"],"num":["5","0","1"]}],"sups":["5B0-5a","5E0-5a"]},{"gens":[[[3,1],[0,2]],[[2,1],[3,3]]],"genus":0,"index":30,"label":"5G0-5b","level":5,"maps":[{"den":["10","10","5","1"],"num":["0","-10","-5","-1"]},{"den":["5","5","1"],"num":["-25","-20","-5"]}],"sups":["5C0-5a","5E0-5a"]},{"gens":[[[4,0],[0,4]],[[2,0],[0,1]]],"genus":0,"index":60,"label":"5H0-5a","level":5,"maps":[{"den":["0","0","0","0","0","1"],"num":["-1"]},{"den":["0","1","2","4","3","1"],"num":["-1","3","-4","2","-1"]},{"den":["-1","-1","1"],"num":["0","5"]}],"sups":["5D0-5a","5D0-5b","5G0-5a"]},{"gens":[[[2,2],[0,13]],[[4,1],[3,1]],[[2,3],[0,6]]],"genus":0,"index":30,"label":"25A0-25a","level":25,"maps":[{"den":["1"],"num":["-11","5","0","5","0","1"]}],"sups":["5B0-5a"]},{"gens":[[[9,10],[0,14]],[[0,7],[7,2]],[[2,8],[0,1]]],"genus":0,"index":60,"label":"25B0-25a","level":25,"maps":[{"den":["1"],"num":["0","0","0","0","0","-1"]},{"den":["0","1"],"num":["1","0","-1"]}],"sups":["5D0-5b","25A0-25a"]},{"gens":[[[9,10],[0,14]],[[0,7],[7,2]],[[4,1],[0,7]]],"genus":0,"index":60,"label":"25B0-25b","level":25,"maps":[{"den":["0","1","2","4","3","1"],"num":["-1","3","-4","2","-1"]},{"den":["-1","-1","1"],"num":["-1","4","1"]}],"sups":["5D0-5a","25A0-25a"]},{"gens":[[[2,0],[0,4]],[[3,0],[1,5]],[[1,0],[0,3]]],"genus":0,"index":8,"label":"7B0-7a","level":7,"maps":[{"den":["0","1"],"num":["49","748","4018","8624","5915","1904","322","28","1"]}],"sups":["1A0-1a"]},{"gens":[[[0,3],[2,3]],[[2,4],[4,5]],[[3,1],[0,4]]],"genus":0,"index":21,"label":"7D0-7a","level":7,"maps":[{"den":["-1","-7","-7","56","133","-140","-658","-57","1596","1008","-2037","-2247","1099","2338","289","-1106","-616","77","189","77","14","1"],"num":["32768","-172032","129024","598528","-720384","-956928","1142848","785856","-784224","93464","430248","-691152","-524)json"
    R"json(125","179109","80589","38395","236796","204204","87472","55440","33600","8000"]}],"sups":["1A0-1a"]},{"gens":[[[6,0],[1,6]],[[1,0],[0,3]]],"genus":0,"index":24,"label":"7E0-7a","level":7,"maps":[{"den":["1","5","-8","1"],"num":["0","-49","49"]}],"sups":["7B0-7a"]},{"gens":[[[6,0],[1,6]],[[3,0],[0,1]]],"genus":0,"index":24,"label":"7E0-7b","level":7,"maps":[{"den":["0","-1","1"],"num":["1","5","-8","1"]}],"sups":["7B0-7a"]},{"gens":[[[6,0],[1,6]],[[3,0],[0,4]]],"genus":0,"index":24,"label":"7E0-7c","level":7,"maps":[{"den":["1","-2","-1","1"],"num":["-7","7","14","-7"]}],"sups":["7B0-7a"]},{"gens":[[[3,1],[4,4]],[[4,4],[1,3]],[[3,4],[0,4]]],"genus":0,"index":28,"label":"7F0-7a","level":7,"maps":[{"den":["1","21","161","448","-483","-4200","364","20583","-9856","-60144","88557","25249","-203469","286398","-233923","129038","-50358","14021","-2737","357","-28","1"],"num":["0","175616","-2963520","18984168","-58148643","91840770","-75827661","-20944902","167532099","-262662624","223139000","-58109436","-133819119","237886698","-212026035","104541150","3362506","-60368574","64776789","-43406706","21198429","-7875228","2251424","-493416","81543","-9842","819","-42","1"]}],"sups":["1A0-1a"]},{"gens":[[[2,0],[0,7]],[[1,0],[1,1]],[[1,0],[0,2]]],"genus":0,"index":14,"label":"13A0-13a","level":13,"maps":[{"den":["0","1"],"num":["13","746","15145","124852","354536","534820","509366","333580","157118","54340","13832","2548","325","26","1"]}],"sups":["1A0-1a"]},{"gens":[[[3,0],[0,9]],[[4,0],[1,10]],[[1,0],[0,2]]],"genus":0,"index":28,"label":"13B0-13a","level":13,"maps":[{"den":["-1","-3","1"],"num":["0","13"]}],"sups":["13A0-13a"]},{"gens":[[[3,0],[0,9]],[[4,0],[1,10]],[[2,0],[0,1]]],"genus":0,"index":28,"label":"13B0-13b","level":13,"maps":[{"den":["0","1"],"num":["-1","-3","1"]}],"sups":["13A0-13a"]},{"gens":[[[5,0],[0,8]],[[1,0],[1,1]],[[1,0],[0,2]]],"genus":0,"index":42,"label":"13C0-13a","level":13,"maps":[{"den":["1","1","-4","1"],"num":["0","-13","13"]}],"sups":["13A0-13a"]},{"gens":[[[5,0],[0,8]],[[1,0],[1,1]],[[2,0],[0,1]]],"genus":0,"index":42,"label":"13C0-13b","level":13,"maps":[{"den":["0","-1","1"],"num":["1","1","-4","1"]}],"sups":["13A0-13a"]},{"gens":[[[5,0],[0,8]],[[1,0],[1,1]],[[2,0],[0,3]]],"genus":0,"index":42,"label":"13C0-13c","level":13,"maps":[{"den":["1","1","-4","1"],"num":["-5","8","7","-5"]}],"sups":["13A0-13a"]},{"gens":[[[0,1],[1,1]]],"genus":0,"index":2,"label":"2A0-2a","level":2,"maps":[{"den":["1"],"num":["1728","0","1"]}],"sups":["1A0-1a"]},{"gens":[[[1,2],[0,1]],[[1,1],[1,2]],[[1,1],[0,3]]],"genus":0,"index":2,"label":"2A0-4a","level":4,"maps":[{"den":["1"],"num":["1728","0","-1"]}],"sups":["1A0-1a"]},{"gens":[[[1,2],[0,1]],[[1,1],[1,2]],[[1,0],[0,3]],[[1,1],[0,5]]],"genus":0,"index":2,"label":"2A0-8a","level":8,"maps":[{"den":["1"],"num":["1728","0","-2"]}],"sups":["1A0-1a"]},{"gens":[[[1,2],[0,1]],[[1,1],[1,2]],[[1,1],[0,3]],[[1,1],[0,5]]],"genus":0,"index":2,"label":"2A0-8b","level":8,"maps":[{"den":["1"],"num":["1728","0","2"]}],"sups":["1A0-1a"]},{"gens":[[[0,1],[1,0]]],"genus":0,"index":3,"label":"2B0-2a","level":2,"maps":[{"den":["0","0","1"],"num":["16777216","-196608","768","-1"]}],"sups":["1A0-1a"]},{"gens":[],"genus":0,"index":6,"label":"2C0-2a","level":2,"maps":[{"den":["1"],"num":["64","0","-1"]}],"sups":["2B0-2a","2A0-2a"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[1,0],[2,1]],[[1,1],[0,3]]],"genus":0,"index":6,"label":"2C0-4a","level":4,"maps":[{"den":["1"],"num":["64","0","64"]}],"sups":["2B0-2a","2A0-4a"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[1,0],[2,1]],[[1,0],[0,3]],[[0,1],[1,0]]],"genus":0,"index":6,"label":"2C0-8a","level":8,"maps":[{"den":["1"],"num":["64","0","32"]}],"sups":["2B0-2a","2A0-8a"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[1,0],[2,1]],[[1,1],[0,3]],[[1,1],[0,5]]],"genus":0,"index":6,"label":"2C0-8b","level":8,"maps":[{"den":["1"],"num":["64","0","-32"]}],"sups":["2B0-2a","2A0-8b"]},{"gens":[[[1,1],[1,2]],[[0,1],[3,0]],[[1,1],[0,3]]],"genus":0,"index":4,"label":"4A0-4a","le)json"
    R"json(vel":4,"maps":[{"den":["1"],"num":["0","0","0","32","-4"]}],"sups":["1A0-1a"]},{"gens":[[[3,0],[0,3]],[[0,1],[3,2]],[[1,0],[0,3]]],"genus":0,"index":6,"label":"4B0-4a","level":4,"maps":[{"den":["4","0","1"],"num":["256"]}],"sups":["2B0-2a"]},{"gens":[[[3,0],[0,3]],[[0,1],[3,2]],[[1,2],[0,3]]],"genus":0,"index":6,"label":"4B0-4b","level":4,"maps":[{"den":["0","16","1"],"num":["-4096"]}],"sups":["2B0-2a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[0,3],[5,2]],[[1,0],[0,3]],[[1,2],[0,5]]],"genus":0,"index":6,"label":"4B0-8a","level":8,"maps":[{"den":["-8","0","1"],"num":["-512"]}],"sups":["2B0-2a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[0,3],[5,2]],[[1,2],[0,3]],[[1,2],[0,5]]],"genus":0,"index":6,"label":"4B0-8b","level":8,"maps":[{"den":["8","0","1"],"num":["512"]}],"sups":["2B0-2a"]},{"gens":[[[1,2],[2,1]],[[0,1],[3,0]],[[1,0],[0,3]]],"genus":0,"index":6,"label":"4C0-4a","level":4,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["2B0-2a"]},{"gens":[[[1,2],[2,1]],[[0,1],[3,0]],[[1,2],[0,3]]],"genus":0,"index":6,"label":"4C0-4b","level":4,"maps":[{"den":["1"],"num":["0","0","-1"]}],"sups":["2B0-2a"]},{"gens":[[[1,4],[0,1]],[[2,1],[3,2]],[[0,3],[5,0]],[[1,0],[0,3]],[[1,2],[0,5]]],"genus":0,"index":6,"label":"4C0-8a","level":8,"maps":[{"den":["1"],"num":["0","0","-128"]}],"sups":["2B0-2a"]},{"gens":[[[1,4],[0,1]],[[2,1],[3,2]],[[0,3],[5,0]],[[1,2],[0,3]],[[1,2],[0,5]]],"genus":0,"index":6,"label":"4C0-8b","level":8,"maps":[{"den":["1"],"num":["0","0","128"]}],"sups":["2B0-2a"]},{"gens":[[[2,1],[1,3]],[[1,1],[0,3]]],"genus":0,"index":8,"label":"4D0-4a","level":4,"maps":[{"den":["0","1"],"num":["2","-2","-1"]}],"sups":["4A0-4a","2A0-4a"]},{"gens":[[[1,4],[0,1]],[[2,1],[5,3]],[[3,3],[0,5]],[[0,1],[3,0]]],"genus":0,"index":8,"label":"4D0-8a","level":8,"maps":[{"den":["4","0","-2"],"num":["-2","4","1"]}],"sups":["4A0-4a","2A0-8a"]},{"gens":[[[3,0],[0,3]],[[1,2],[2,1]],[[0,1],[1,0]]],"genus":0,"index":12,"label":"4E0-4a","level":4,"maps":[{"den":["0","2"],"num":["-1","0","1"]}],"sups":["2C0-4a","4C0-4a","4B0-4b"]},{"gens":[[[3,0],[0,3]],[[1,2],[2,1]],[[1,0],[0,3]]],"genus":0,"index":12,"label":"4E0-4b","level":4,"maps":[{"den":["1"],"num":["8","0","16"]}],"sups":["2C0-2a","4B0-4a","4C0-4a"]},{"gens":[[[3,0],[0,3]],[[1,2],[2,1]],[[1,2],[0,3]]],"genus":0,"index":12,"label":"4E0-4c","level":4,"maps":[{"den":["0","1"],"num":["4","0","4"]}],"sups":["2C0-2a","4C0-4b","4B0-4b"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,2],[2,5]],[[1,0],[0,3]],[[0,1],[1,0]]],"genus":0,"index":12,"label":"4E0-8a","level":8,"maps":[{"den":["-2","0","1"],"num":["0","4"]}],"sups":["2C0-8a","4B0-8a","4C0-4a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,2],[2,5]],[[1,0],[0,3]],[[1,2],[0,5]]],"genus":0,"index":12,"label":"4E0-8b","level":8,"maps":[{"den":["1"],"num":["-8","0","8"]}],"sups":["2C0-2a","4B0-8a","4C0-8a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,2],[2,5]],[[1,2],[0,3]],[[0,1],[1,0]]],"genus":0,"index":12,"label":"4E0-8c","level":8,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["2C0-8a","4C0-8b","4B0-4b"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,2],[2,5]],[[1,2],[0,3]],[[1,2],[0,5]]],"genus":0,"index":12,"label":"4E0-8d","level":8,"maps":[{"den":["1"],"num":["8","0","8"]}],"sups":["2C0-2a","4B0-8b","4C0-8b"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,2],[2,5]],[[1,2],[0,5]],[[0,1],[1,0]]],"genus":0,"index":12,"label":"4E0-8e","level":8,"maps":[{"den":["-1","-2","1"],"num":["1","0","1"]}],"sups":["4C0-8b","4B0-8a","2C0-4a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,2],[2,5]],[[3,0],[0,5]],[[0,1],[3,2]]],"genus":0,"index":12,"label":"4E0-8f","level":8,"maps":[{"den":["1","0","1"],"num":["-1","2","1"]}],"sups":["2C0-8b","4C0-8b","4B0-4a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,2],[2,5]],[[3,0],[0,5]],[[2,1],[1,2]]],"genus":0,"index":12,"label":"4E0-8g","level":8,"maps":[{"den":["2","0","1"],"num":["0","4"]}],"sups":["2C0-8b","4B0-8b","4C0-4a"]},{"gens":)json"
    R"json([[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,2],[2,5]],[[3,2],[0,5]],[[0,1],[3,0]]],"genus":0,"index":12,"label":"4E0-8h","level":8,"maps":[{"den":["-1","2","1"],"num":["2","0","2"]}],"sups":["2C0-8b","4B0-8a","4C0-4b"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,2],[2,5]],[[3,2],[0,5]],[[2,1],[1,2]]],"genus":0,"index":12,"label":"4E0-8i","level":8,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["2C0-8b","4C0-8a","4B0-4b"]},{"gens":[[[0,1],[3,0]],[[1,0],[0,3]]],"genus":0,"index":12,"label":"4F0-4a","level":4,"maps":[{"den":["1"],"num":["-8","0","8"]}],"sups":["4C0-4a"]},{"gens":[[[0,1],[3,0]],[[2,1],[1,2]]],"genus":0,"index":12,"label":"4F0-4b","level":4,"maps":[{"den":["1"],"num":["8","0","8"]}],"sups":["4C0-4a","4A0-4a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[0,3],[5,0]],[[1,0],[0,3]],[[1,2],[2,1]]],"genus":0,"index":12,"label":"4F0-8a","level":8,"maps":[{"den":["1"],"num":["8","0","4"]}],"sups":["4C0-4a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[0,3],[5,0]],[[3,0],[0,5]],[[1,2],[2,1]]],"genus":0,"index":12,"label":"4F0-8b","level":8,"maps":[{"den":["1"],"num":["-8","0","4"]}],"sups":["4C0-4a"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[3,0],[0,11]],[[1,0],[4,1]],[[1,1],[0,5]],[[1,5],[2,5]]],"genus":0,"index":24,"label":"4G0-16a","level":16,"maps":[{"den":["0","2"],"num":["1","0","-1"]}],"sups":["4E0-8f"]},{"gens":[[[3,0],[0,3]],[[1,0],[0,3]]],"genus":0,"index":24,"label":"4G0-4a","level":4,"maps":[{"den":["4"],"num":["0","0","1"]}],"sups":["4E0-4c","4E0-4b","4F0-4a"]},{"gens":[[[3,0],[0,3]],[[1,3],[0,3]]],"genus":0,"index":24,"label":"4G0-4b","level":4,"maps":[{"den":["2"],"num":["0","0","1"]}],"sups":["4E0-4a","4F0-4a","4F0-4b","4D0-4a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,0],[4,1]],[[0,1],[3,0]],[[2,1],[5,2]]],"genus":0,"index":24,"label":"4G0-8a","level":8,"maps":[{"den":["-2","0","1"],"num":["0","4"]}],"sups":["4F0-4b","4E0-8a","4F0-8b","4D0-8a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,0],[4,1]],[[1,0],[0,3]],[[0,1],[1,0]]],"genus":0,"index":24,"label":"4G0-8b","level":8,"maps":[{"den":["-2","0","1"],"num":["4","4","2"]}],"sups":["4F0-4a","4F0-8a","4E0-8a"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,0],[4,1]],[[1,0],[0,3]],[[1,2],[0,5]]],"genus":0,"index":24,"label":"4G0-8c","level":8,"maps":[{"den":["2"],"num":["0","0","1"]}],"sups":["4E0-4c","4E0-8b","4E0-8d"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,0],[4,1]],[[1,2],[0,5]],[[3,0],[2,5]]],"genus":0,"index":24,"label":"4G0-8d","level":8,"maps":[{"den":["1","0","1"],"num":["-2","0","2"]}],"sups":["4F0-8b","4E0-8b","4E0-4b"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,0],[4,1]],[[1,3],[0,3]],[[1,2],[0,5]]],"genus":0,"index":24,"label":"4G0-8e","level":8,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["4E0-4a","4F0-8a","4F0-8b"]},{"gens":[[[3,0],[0,3]],[[1,4],[0,1]],[[5,0],[0,5]],[[1,0],[4,1]],[[1,3],[0,3]],[[1,3],[2,3]]],"genus":0,"index":24,"label":"4G0-8f","level":8,"maps":[{"den":["2","0","1"],"num":["0","4"]}],"sups":["4F0-4a","4E0-8g","4F0-8b"]},{"gens":[[[3,0],[0,3]],[[0,3],[5,0]],[[1,2],[2,5]],[[1,0],[0,3]],[[1,0],[0,5]]],"genus":0,"index":12,"label":"8B0-8a","level":8,"maps":[{"den":["1"],"num":["0","0","16"]}],"sups":["4C0-4a"]},{"gens":[[[3,0],[0,3]],[[0,3],[5,0]],[[1,2],[2,5]],[[1,0],[0,3]],[[1,4],[0,5]]],"genus":0,"index":12,"label":"8B0-8b","level":8,"maps":[{"den":["1"],"num":["0","0","32"]}],"sups":["4C0-4a"]},{"gens":[[[3,0],[0,3]],[[0,3],[5,0]],[[1,2],[2,5]],[[3,2],[0,1]],[[1,0],[0,5]]],"genus":0,"index":12,"label":"8B0-8c","level":8,"maps":[{"den":["1"],"num":["0","0","32"]}],"sups":["4C0-4b"]},{"gens":[[[3,0],[0,3]],[[0,3],[5,0]],[[1,2],[2,5]],[[3,2],[0,1]],[[1,4],[0,5]]],"genus":0,"index":12,"label":"8B0-8d","level":8,"maps":[{"den":["1"],"num":["0","0","16"]}],"sups":["4C0-4b"]},{"gens":[[[3,0],[0,3]],[[5,0],[0,5]],[[0,3],[5,2]],[[1,2],[0,3]],[[1,0],[0,5]]],"genus":0,"index":12,"label":"8C0-8a","level":8,"maps":[{"den":["1"],"num":["0","0","-8"]}],"sups":)json"
    R"json(["4B0-4b"]},{"gens":[[[3,0],[0,3]],[[5,0],[0,5]],[[0,3],[5,2]],[[1,2],[0,3]],[[1,4],[0,5]]],"genus":0,"index":12,"label":"8C0-8b","level":8,"maps":[{"den":["1"],"num":["-16","0","-4"]}],"sups":["4B0-4b"]},{"gens":[[[3,0],[0,3]],[[5,0],[0,5]],[[0,3],[5,2]],[[3,2],[0,1]],[[1,0],[0,5]]],"genus":0,"index":12,"label":"8C0-8c","level":8,"maps":[{"den":["1"],"num":["-16","0","-8"]}],"sups":["4B0-4b"]},{"gens":[[[3,0],[0,3]],[[5,0],[0,5]],[[0,3],[5,2]],[[3,2],[0,1]],[[1,4],[0,5]]],"genus":0,"index":12,"label":"8C0-8d","level":8,"maps":[{"den":["1"],"num":["0","0","-1"]}],"sups":["4B0-4b"]},{"gens":[[[2,1],[3,2]],[[0,3],[5,0]],[[1,0],[0,3]],[[1,0],[0,5]]],"genus":0,"index":12,"label":"8D0-8a","level":8,"maps":[{"den":["-2","0","1"],"num":["16"]}],"sups":["4C0-4a"]},{"gens":[[[2,1],[3,2]],[[0,3],[5,0]],[[1,0],[0,3]],[[1,4],[0,5]]],"genus":0,"index":12,"label":"8D0-8b","level":8,"maps":[{"den":["4","0","1"],"num":["32"]}],"sups":["4C0-4a"]},{"gens":[[[2,1],[3,2]],[[0,3],[5,0]],[[1,4],[0,3]],[[1,0],[0,5]]],"genus":0,"index":12,"label":"8D0-8c","level":8,"maps":[{"den":["2","0","1"],"num":["16"]}],"sups":["4C0-4a"]},{"gens":[[[2,1],[3,2]],[[0,3],[5,0]],[[1,4],[0,3]],[[1,4],[0,5]]],"genus":0,"index":12,"label":"8D0-8d","level":8,"maps":[{"den":["-4","0","1"],"num":["32"]}],"sups":["4C0-4a"]},{"gens":[[[3,4],[0,11]],[[2,3],[3,5]],[[3,3],[0,5]],[[0,1],[3,0]]],"genus":0,"index":16,"label":"8E0-16a","level":16,"maps":[{"den":["2","0","1"],"num":["0","-4"]}],"sups":["4D0-8a"]},{"gens":[[[3,4],[0,11]],[[2,3],[3,5]],[[3,3],[0,5]],[[0,3],[1,0]]],"genus":0,"index":16,"label":"8E0-16b","level":16,"maps":[{"den":["2","-4","1"],"num":["-4","4","-2"]}],"sups":["4D0-8a"]},{"gens":[[[1,1],[1,2]],[[0,3],[5,0]],[[3,3],[0,5]],[[2,1],[1,3]]],"genus":0,"index":16,"label":"8F0-8a","level":8,"maps":[{"den":["4","0","-4","0","1"],"num":["-32","-64","-32","0","8"]}],"sups":["4A0-4a"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[0,11]],[[1,0],[8,1]],[[3,1],[0,5]],[[1,2],[2,1]]],"genus":0,"index":24,"label":"8G0-16a","level":16,"maps":[{"den":["0","2"],"num":["1","0","-1"]}],"sups":["4E0-8e"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[1,0],[0,3]],[[1,0],[0,5]]],"genus":0,"index":24,"label":"8G0-8a","level":8,"maps":[{"den":["0","1"],"num":["-1","0","1"]}],"sups":["8C0-8b","8C0-8d","4E0-4c"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[1,0],[0,3]],[[1,0],[4,5]]],"genus":0,"index":24,"label":"8G0-8b","level":8,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["8C0-8a","8C0-8c","4E0-4c"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[1,0],[0,3]],[[1,1],[0,5]]],"genus":0,"index":24,"label":"8G0-8c","level":8,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["4E0-8c","8C0-8a","8C0-8d"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[1,0],[0,5]],[[3,0],[2,1]]],"genus":0,"index":24,"label":"8G0-8d","level":8,"maps":[{"den":["2"],"num":["0","0","1"]}],"sups":["4E0-4b","8D0-8d","8D0-8b"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[1,0],[2,3]],[[3,2],[2,1]]],"genus":0,"index":24,"label":"8G0-8e","level":8,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["4E0-4b","8D0-8a","8D0-8c"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[1,1],[0,3]],[[1,0],[0,5]]],"genus":0,"index":24,"label":"8G0-8f","level":8,"maps":[{"den":["0","2"],"num":["-1","0","1"]}],"sups":["4E0-4a","8C0-8d","8D0-8d"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[1,1],[0,3]],[[1,1],[4,1]]],"genus":0,"index":24,"label":"8G0-8g","level":8,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["4E0-8i","8C0-8c","8C0-8d"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[1,1],[0,3]],[[3,2],[2,1]]],"genus":0,"index":24,"label":"8G0-8h","level":8,"maps":[{"den":["-1","2","1"],"num":["2","0","2"]}],"sups":["4E0-8g","8D0-8d","8D0-8c"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[1,3],[2,3]],[[3,2],[2,1]]],"genus":0,"index":24,"label":"8G0-8i","level":8,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["4E0-8g","8D0-8b","8D0-8a"]},)json"
    R"json({"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[3,0],[0,5]],[[1,1],[4,1]]],"genus":0,"index":24,"label":"8G0-8j","level":8,"maps":[{"den":["-1","-2","1"],"num":["2","0","2"]}],"sups":["4E0-8i","8C0-8a","8C0-8b"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[3,1],[0,5]],[[1,0],[4,5]]],"genus":0,"index":24,"label":"8G0-8k","level":8,"maps":[{"den":["1","0","1"],"num":["-2","0","2"]}],"sups":["8D0-8a","8C0-8a","4E0-4a"]},{"gens":[[[1,2],[0,1]],[[3,0],[0,3]],[[5,0],[0,5]],[[3,1],[0,5]],[[3,0],[2,1]]],"genus":0,"index":24,"label":"8G0-8l","level":8,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["4E0-8a","8D0-8d","8D0-8a"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,0],[0,3]],[[1,0],[0,5]]],"genus":0,"index":24,"label":"8H0-8a","level":8,"maps":[{"den":["-2","0","1"],"num":["0","2"]}],"sups":["8B0-8a","8D0-8a","4F0-4a"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,0],[0,3]],[[1,2],[2,3]]],"genus":0,"index":24,"label":"8H0-8b","level":8,"maps":[{"den":["-2","0","1"],"num":["0","4"]}],"sups":["4F0-8a","8D0-8a","8B0-8b"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,0],[0,3]],[[1,4],[0,5]]],"genus":0,"index":24,"label":"8H0-8c","level":8,"maps":[{"den":["1","0","1"],"num":["0","1"]}],"sups":["8B0-8b","8D0-8b","4F0-4a"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,0],[0,5]],[[1,2],[2,3]]],"genus":0,"index":24,"label":"8H0-8d","level":8,"maps":[{"den":["-1","2","1"],"num":["1","0","1"]}],"sups":["8B0-8a","8D0-8a","4F0-4b"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,4],[0,3]],[[1,0],[0,5]]],"genus":0,"index":24,"label":"8H0-8e","level":8,"maps":[{"den":["2","0","1"],"num":["0","2"]}],"sups":["8B0-8a","8D0-8c","4F0-4a"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,4],[0,3]],[[1,2],[2,1]]],"genus":0,"index":24,"label":"8H0-8f","level":8,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["4F0-8a","8B0-8a","8D0-8d"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,4],[0,3]],[[1,4],[0,5]]],"genus":0,"index":24,"label":"8H0-8g","level":8,"maps":[{"den":["-1","0","1"],"num":["0","1"]}],"sups":["8B0-8b","8D0-8d","4F0-4a"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,4],[0,5]],[[2,1],[1,2]]],"genus":0,"index":24,"label":"8H0-8h","level":8,"maps":[{"den":["0","2"],"num":["-1","0","1"]}],"sups":["4F0-4b","8B0-8b","8D0-8d"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[3,0],[0,5]],[[1,2],[2,1]]],"genus":0,"index":24,"label":"8H0-8i","level":8,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["4F0-8b","8B0-8a","8D0-8d"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[3,0],[0,5]],[[2,3],[5,2]]],"genus":0,"index":24,"label":"8H0-8j","level":8,"maps":[{"den":["-1","2","1"],"num":["2","0","2"]}],"sups":["4F0-8b","8D0-8a","8B0-8b"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[3,4],[0,5]],[[1,2],[2,1]]],"genus":0,"index":24,"label":"8H0-8k","level":8,"maps":[{"den":["1","0","1"],"num":["-1","2","1"]}],"sups":["4F0-8b","8B0-8a","8D0-8b"]},{"gens":[[[3,0],[0,3]],[[1,4],[4,1]],[[0,3],[5,0]],[[3,4],[0,5]],[[2,1],[1,2]]],"genus":0,"index":24,"label":"8H0-8l","level":8,"maps":[{"den":["2","0","1"],"num":["0","4"]}],"sups":["4F0-8b","8D0-8c","8B0-8b"]},{"gens":[[[7,0],[0,7]],[[0,3],[5,2]],[[1,4],[0,5]],[[1,6],[0,3]]],"genus":0,"index":24,"label":"8I0-8a","level":8,"maps":[{"den":["-2","0","1"],"num":["0","0","4"]}],"sups":["8C0-8d"]},{"gens":[[[7,0],[0,7]],[[0,3],[5,2]],[[3,2],[0,1]],[[1,4],[0,5]]],"genus":0,"index":24,"label":"8I0-8b","level":8,"maps":[{"den":["2","0","1"],"num":["0","0","4"]}],"sups":["8C0-8d"]},{"gens":[[[7,0],[0,7]],[[0,3],[5,2]],[[3,2],[0,1]],[[5,4],[0,1]]],"genus":0,"index":24,"label":"8I0-8c","level":8,"maps":[{"den":["-1","0","1"],"num":["4"]}],"sups":["8C0-8d"]},{"gens":[[[7,0],[0,7]],[[0,3],[5,2]],[[5,2],[0,3]],[[5,4],[0,1]]],"genus":0,"index":24,"label":"8I0-8d","level":8,"maps":[{"den":["1","0","1"],"num":["4"]}],"sups":["8C0-8d"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,2],[4,1]],[[1,0],[0,3]],[)json"
    R"json([1,0],[0,5]]],"genus":0,"index":24,"label":"8J0-8a","level":8,"maps":[{"den":["0","0","1"],"num":["2","0","1"]}],"sups":["4E0-4c"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,2],[4,1]],[[1,0],[0,3]],[[1,2],[0,5]]],"genus":0,"index":24,"label":"8J0-8b","level":8,"maps":[{"den":["1"],"num":["-1","0","1"]}],"sups":["4E0-4c"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,2],[4,1]],[[1,2],[0,3]],[[1,0],[0,5]]],"genus":0,"index":24,"label":"8J0-8c","level":8,"maps":[{"den":["-2","0","1"],"num":["0","0","1"]}],"sups":["4E0-4c"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,2],[4,1]],[[1,2],[0,3]],[[1,2],[0,5]]],"genus":0,"index":24,"label":"8J0-8d","level":8,"maps":[{"den":["1"],"num":["1","0","1"]}],"sups":["4E0-4c"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[0,3],[5,0]],[[3,0],[0,5]],[[1,2],[2,1]]],"genus":0,"index":24,"label":"8K0-16a","level":16,"maps":[{"den":["2"],"num":["4","0","1"]}],"sups":["4F0-8b"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[0,3],[5,0]],[[7,0],[0,9]],[[1,2],[2,1]]],"genus":0,"index":24,"label":"8K0-16b","level":16,"maps":[{"den":["2"],"num":["-4","0","1"]}],"sups":["4F0-8b"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[2,3],[1,2]],[[3,0],[0,5]],[[1,2],[2,1]]],"genus":0,"index":24,"label":"8K0-16c","level":16,"maps":[{"den":["1"],"num":["2","0","1"]}],"sups":["4F0-8b"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[2,3],[1,2]],[[7,0],[0,9]],[[1,2],[2,1]]],"genus":0,"index":24,"label":"8K0-16d","level":16,"maps":[{"den":["1"],"num":["-2","0","1"]}],"sups":["4F0-8b"]},{"gens":[[[0,3],[5,0]],[[5,2],[2,1]],[[1,2],[0,3]],[[1,4],[0,5]]],"genus":0,"index":24,"label":"8L0-8a","level":8,"maps":[{"den":["0","4"],"num":["-1","-2","1"]}],"sups":["8B0-8d"]},{"gens":[[[0,3],[5,0]],[[5,2],[2,1]],[[5,4],[0,1]],[[3,6],[0,1]]],"genus":0,"index":24,"label":"8L0-8b","level":8,"maps":[{"den":["-1","-2","1"],"num":["0","2"]}],"sups":["8B0-8d"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[9,0],[0,9]],[[1,0],[4,1]],[[0,1],[1,0]],[[2,3],[5,6]]],"genus":0,"index":48,"label":"8N0-16a","level":16,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["4G0-8a","8K0-16a","8K0-16d"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[9,0],[0,9]],[[1,0],[4,1]],[[0,1],[5,0]],[[2,5],[1,2]]],"genus":0,"index":48,"label":"8N0-16b","level":16,"maps":[{"den":["2"],"num":["0","0","1"]}],"sups":["4G0-8e","8K0-16a","8K0-16b"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[9,0],[0,9]],[[1,0],[4,1]],[[1,2],[2,1]],[[0,5],[1,0]]],"genus":0,"index":48,"label":"8N0-16c","level":16,"maps":[{"den":["-1","0","1"],"num":["0","4"]}],"sups":["8K0-16c","4G0-8e","8K0-16d"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[9,0],[0,9]],[[1,0],[4,1]],[[3,2],[2,5]],[[2,3],[5,6]]],"genus":0,"index":48,"label":"8N0-16d","level":16,"maps":[{"den":["-1","-2","1"],"num":["2","0","2"]}],"sups":["4G0-8a","8K0-16b","8K0-16c"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[9,0],[0,9]],[[1,0],[4,1]],[[7,0],[0,9]],[[1,2],[2,1]]],"genus":0,"index":48,"label":"8N0-16e","level":16,"maps":[{"den":["0","2"],"num":["-1","0","1"]}],"sups":["4G0-8d","8K0-16d","8K0-16b"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[9,0],[0,9]],[[1,0],[4,1]],[[7,0],[0,9]],[[2,1],[1,6]]],"genus":0,"index":48,"label":"8N0-16f","level":16,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["4G0-8f","8K0-16b","8K0-16d"]},{"gens":[[[1,4],[0,1]],[[15,0],[0,15]],[[7,0],[0,23]],[[1,0],[4,1]],[[3,0],[0,5]],[[2,3],[1,0]]],"genus":0,"index":48,"label":"8N0-32a","level":32,"maps":[{"den":["-1","-2","1"],"num":["1","-2","-1"]}],"sups":["4G0-16a"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[1,0],[4,1]],[[1,2],[0,3]],[[1,0],[0,5]]],"genus":0,"index":48,"label":"8N0-8a","level":8,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["4G0-4a","8J0-8a","8J0-8c"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[1,0],[4,1]],[[1,2],[0,3]],[[1,2],[0,5]]],"genus":0,"index":48,"label":"8N0-8b","level":8,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["4G0-8c","8J0-8c","8J0-8b"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[1,0],[4,1]],[[1,2],[0,3]],[[3,2],[0,5]]],"genus":0,"index":48,"label":"8N0-8c","level":)json"
    R"json(8,"maps":[{"den":["0","1"],"num":["1","0","1"]}],"sups":["4G0-4a","8J0-8d","8J0-8b"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[1,0],[4,1]],[[3,0],[0,1]],[[1,0],[2,5]]],"genus":0,"index":48,"label":"8N0-8d","level":8,"maps":[{"den":["-1","2","1"],"num":["2","0","2"]}],"sups":["4G0-8c","8J0-8c","8J0-8d"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[1,0],[4,1]],[[3,0],[0,1]],[[1,2],[0,5]]],"genus":0,"index":48,"label":"8N0-8e","level":8,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["4G0-8c","8J0-8a","8J0-8b"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[1,0],[4,1]],[[3,0],[0,1]],[[5,0],[0,1]]],"genus":0,"index":48,"label":"8N0-8f","level":8,"maps":[{"den":["0","1"],"num":["-1","0","1"]}],"sups":["4G0-4a","8J0-8b","8J0-8c"]},{"gens":[[[1,4],[0,1]],[[7,0],[0,7]],[[3,2],[0,11]],[[1,0],[8,1]],[[1,3],[0,5]],[[5,1],[4,3]]],"genus":0,"index":48,"label":"8O0-16a","level":16,"maps":[{"den":["0","2"],"num":["1","0","-1"]}],"sups":["8G0-8j"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,0],[0,3]],[[1,0],[4,5]]],"genus":0,"index":48,"label":"8O0-8a","level":8,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["8G0-8b","8J0-8b","8J0-8c"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,0],[0,5]],[[1,0],[4,3]]],"genus":0,"index":48,"label":"8O0-8b","level":8,"maps":[{"den":["0","2"],"num":["-1","0","1"]}],"sups":["8G0-8a","8J0-8c","8I0-8c"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,2],[0,3]],[[1,0],[0,5]]],"genus":0,"index":48,"label":"8O0-8c","level":8,"maps":[{"den":["-1","0","1"],"num":["0","2"]}],"sups":["8J0-8a","8J0-8c","8G0-8a"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,2],[0,3]],[[1,2],[0,5]]],"genus":0,"index":48,"label":"8O0-8d","level":8,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["8J0-8b","8J0-8d","8G0-8a"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,2],[0,5]],[[1,2],[4,3]]],"genus":0,"index":48,"label":"8O0-8e","level":8,"maps":[{"den":["0","2"],"num":["1","0","1"]}],"sups":["8I0-8a","8J0-8b","8G0-8a"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,3],[0,3]],[[1,0],[0,5]]],"genus":0,"index":48,"label":"8O0-8f","level":8,"maps":[{"den":["2"],"num":["0","0","1"]}],"sups":["8G0-8f","8I0-8c","8I0-8d"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,3],[0,3]],[[1,2],[0,5]]],"genus":0,"index":48,"label":"8O0-8g","level":8,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["8G0-8f","8I0-8b","8I0-8a"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[1,3],[0,3]],[[1,3],[4,1]]],"genus":0,"index":48,"label":"8O0-8h","level":8,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["8G0-8g","8I0-8c","8I0-8a"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[3,0],[0,5]],[[1,2],[4,3]]],"genus":0,"index":48,"label":"8O0-8i","level":8,"maps":[{"den":["2","-4","1"],"num":["-2","0","1"]}],"sups":["8J0-8a","8J0-8b","8G0-8b"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[3,2],[0,5]],[[1,0],[4,3]]],"genus":0,"index":48,"label":"8O0-8j","level":8,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["8G0-8b","8J0-8d","8J0-8c"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[3,3],[0,5]],[[1,0],[4,3]]],"genus":0,"index":48,"label":"8O0-8k","level":8,"maps":[{"den":["-2","0","1"],"num":["2","4","1"]}],"sups":["8I0-8b","8G0-8c","8I0-8c"]},{"gens":[[[3,2],[0,3]],[[5,2],[0,5]],[[3,3],[0,5]],[[1,1],[4,1]]],"genus":0,"index":48,"label":"8O0-8l","level":8,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["8G0-8c","8I0-8d","8I0-8a"]},{"gens":[[[3,4],[4,3]],[[0,3],[5,0]],[[3,4],[0,1]],[[1,4],[0,5]]],"genus":0,"index":48,"label":"8P0-8a","level":8,"maps":[{"den":["2","-4","1"],"num":["2","0","1"]}],"sups":["8H0-8g"]},{"gens":[[[3,4],[4,3]],[[0,3],[5,0]],[[3,4],[0,1]],[[5,4],[0,1]]],"genus":0,"index":48,"label":"8P0-8b","level":8,"maps":[{"den":["-2","2"],"num":["1","0","1"]}],"sups":["8H0-8g"]},{"gens":[[[3,0],[0,11]],[[0,3],[5,0]],[[1,2],[2,5]],[[1,0],[0,5]],[[1,8],[0,3]]],"genus":0,"index":24,"label":"16B0-16a","level":16,"maps":[{"den":["2"],"num":["0","0","1"]}],"sups":["8B0-8a"]},{"gens":[[[3,0],[0,11]],[[0,3],[5,0]],[[1,2],[2,5]],[[1,4],[0,5]],[[5,2],[0,3]]],"genus":0,"index":24,"label":"16B0-1)json"
    R"json(6b","level":16,"maps":[{"den":["2"],"num":["0","0","1"]}],"sups":["8B0-8d"]},{"gens":[[[3,0],[0,11]],[[0,3],[5,0]],[[1,2],[2,5]],[[3,0],[0,5]],[[1,8],[0,3]]],"genus":0,"index":24,"label":"16B0-16c","level":16,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["8B0-8a"]},{"gens":[[[3,0],[0,11]],[[0,3],[5,0]],[[1,2],[2,5]],[[3,6],[0,5]],[[3,4],[0,7]]],"genus":0,"index":24,"label":"16B0-16d","level":16,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["8B0-8d"]},{"gens":[[[7,0],[0,7]],[[3,8],[0,11]],[[0,3],[5,2]],[[1,2],[0,3]],[[1,4],[0,5]]],"genus":0,"index":24,"label":"16C0-16a","level":16,"maps":[{"den":["2"],"num":["0","0","1"]}],"sups":["8C0-8b"]},{"gens":[[[7,0],[0,7]],[[3,8],[0,11]],[[0,3],[5,2]],[[1,2],[0,3]],[[5,4],[0,1]]],"genus":0,"index":24,"label":"16C0-16b","level":16,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["8C0-8b"]},{"gens":[[[7,0],[0,7]],[[3,8],[0,11]],[[0,3],[5,2]],[[1,4],[0,5]],[[5,2],[0,3]]],"genus":0,"index":24,"label":"16C0-16c","level":16,"maps":[{"den":["1"],"num":["0","0","2"]}],"sups":["8C0-8d"]},{"gens":[[[7,0],[0,7]],[[3,8],[0,11]],[[0,3],[5,2]],[[5,4],[0,1]],[[1,6],[0,3]]],"genus":0,"index":24,"label":"16C0-16d","level":16,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["8C0-8d"]},{"gens":[[[7,0],[0,7]],[[3,0],[0,11]],[[0,3],[5,2]],[[1,4],[0,5]],[[5,2],[0,3]]],"genus":0,"index":24,"label":"16D0-16a","level":16,"maps":[{"den":["1"],"num":["-4","0","1"]}],"sups":["8C0-8d"]},{"gens":[[[7,0],[0,7]],[[3,0],[0,11]],[[0,3],[5,2]],[[3,2],[0,1]],[[1,4],[0,5]]],"genus":0,"index":24,"label":"16D0-16b","level":16,"maps":[{"den":["1"],"num":["4","0","1"]}],"sups":["8C0-8d"]},{"gens":[[[7,0],[0,7]],[[3,0],[0,11]],[[0,3],[5,2]],[[3,2],[0,1]],[[5,2],[0,3]]],"genus":0,"index":24,"label":"16D0-16c","level":16,"maps":[{"den":["1"],"num":["-4","0","2"]}],"sups":["8C0-8d"]},{"gens":[[[7,0],[0,7]],[[3,0],[0,11]],[[0,3],[5,2]],[[3,6],[0,5]],[[3,4],[0,7]]],"genus":0,"index":24,"label":"16D0-16d","level":16,"maps":[{"den":["1"],"num":["4","0","2"]}],"sups":["8C0-8d"]},{"gens":[[[0,3],[5,8]],[[2,1],[3,10]],[[1,0],[0,3]],[[1,0],[0,5]]],"genus":0,"index":24,"label":"16E0-16a","level":16,"maps":[{"den":["2"],"num":["4","0","1"]}],"sups":["8D0-8a"]},{"gens":[[[0,3],[5,8]],[[2,1],[3,10]],[[1,0],[0,3]],[[1,8],[0,5]]],"genus":0,"index":24,"label":"16E0-16b","level":16,"maps":[{"den":["1"],"num":["-2","0","1"]}],"sups":["8D0-8a"]},{"gens":[[[0,3],[5,8]],[[2,1],[3,10]],[[1,0],[0,5]],[[1,8],[0,3]]],"genus":0,"index":24,"label":"16E0-16c","level":16,"maps":[{"den":["2"],"num":["-4","0","1"]}],"sups":["8D0-8a"]},{"gens":[[[0,3],[5,8]],[[2,1],[3,10]],[[3,0],[0,5]],[[1,8],[0,3]]],"genus":0,"index":24,"label":"16E0-16d","level":16,"maps":[{"den":["1"],"num":["2","0","1"]}],"sups":["8D0-8a"]},{"gens":[[[3,4],[0,11]],[[6,3],[7,9]],[[3,3],[0,5]],[[0,3],[1,0]]],"genus":0,"index":32,"label":"16F0-32a","level":32,"maps":[{"den":["0","2"],"num":["-2","0","-1"]}],"sups":["8E0-16b"]},{"gens":[[[3,4],[0,11]],[[6,3],[7,9]],[[5,5],[0,3]],[[0,3],[1,0]]],"genus":0,"index":32,"label":"16F0-32b","level":32,"maps":[{"den":["2","-2","1"],"num":["2","-4","1"]}],"sups":["8E0-16b"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[1,3],[2,3]],[[3,2],[2,1]]],"genus":0,"index":48,"label":"16G0-16a","level":16,"maps":[{"den":["-1","2","1"],"num":["2","0","2"]}],"sups":["8G0-8i","16E0-16c","16E0-16d"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[3,0],[0,1]],[[1,0],[0,5]]],"genus":0,"index":48,"label":"16G0-16b","level":16,"maps":[{"den":["2"],"num":["0","0","1"]}],"sups":["8G0-8a","16D0-16a","16D0-16b"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[3,0],[0,1]],[[5,0],[0,1]]],"genus":0,"index":48,"label":"16G0-16c","level":16,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["8G0-8a","16D0-16c","16D0-16d"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[3,0],[0,1]],[[5,1],[0,1]]],"genus":0,"index":48,"label":"16G0-16d","level":16,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["8G0-8c","16D0-16a","16D0-16c"]},{"g)json"
    R"json(ens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[3,1],[0,1]],[[1,1],[0,5]]],"genus":0,"index":48,"label":"16G0-16e","level":16,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["8G0-8g","16D0-16b","16D0-16c"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[3,1],[0,1]],[[1,1],[4,1]]],"genus":0,"index":48,"label":"16G0-16f","level":16,"maps":[{"den":["-1","2","1"],"num":["2","0","2"]}],"sups":["8G0-8g","16D0-16a","16D0-16d"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[3,1],[0,1]],[[5,0],[0,1]]],"genus":0,"index":48,"label":"16G0-16g","level":16,"maps":[{"den":["0","2"],"num":["-1","0","1"]}],"sups":["8G0-8f","16D0-16c","16D0-16a"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[3,2],[2,1]],[[1,4],[2,3]]],"genus":0,"index":48,"label":"16G0-16h","level":16,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["8G0-8e","16E0-16b","16E0-16d"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[3,2],[2,1]],[[3,3],[4,5]]],"genus":0,"index":48,"label":"16G0-16i","level":16,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["8G0-8i","16E0-16a","16E0-16b"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[3,4],[2,1]],[[1,2],[4,5]]],"genus":0,"index":48,"label":"16G0-16j","level":16,"maps":[{"den":["2"],"num":["0","0","1"]}],"sups":["8G0-8e","16E0-16c","16E0-16a"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[7,1],[0,9]],[[1,2],[4,5]]],"genus":0,"index":48,"label":"16G0-16k","level":16,"maps":[{"den":["0","2"],"num":["-1","0","1"]}],"sups":["8G0-8k","16E0-16b","16E0-16c"]},{"gens":[[[1,2],[0,1]],[[7,0],[0,7]],[[3,0],[8,11]],[[7,1],[0,9]],[[3,0],[2,1]]],"genus":0,"index":48,"label":"16G0-16l","level":16,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["8G0-8l","16E0-16c","16E0-16b"]},{"gens":[[[1,2],[0,1]],[[15,0],[0,15]],[[7,0],[0,23]],[[3,0],[8,11]],[[3,1],[0,5]],[[5,2],[2,5]]],"genus":0,"index":48,"label":"16G0-32a","level":32,"maps":[{"den":["-1","-2","1"],"num":["1","-2","-1"]}],"sups":["8G0-16a"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[1,4],[0,5]],[[1,2],[0,7]]],"genus":0,"index":48,"label":"16H0-16a","level":16,"maps":[{"den":["2","0","1"],"num":["0","4"]}],"sups":["8I0-8a","16C0-16c","16D0-16a"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[1,4],[0,5]],[[1,6],[0,3]]],"genus":0,"index":48,"label":"16H0-16b","level":16,"maps":[{"den":["-1","-2","1"],"num":["2","0","2"]}],"sups":["8I0-8a","16C0-16c","16D0-16b"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[1,4],[0,5]],[[5,2],[0,3]]],"genus":0,"index":48,"label":"16H0-16c","level":16,"maps":[{"den":["-2","0","1"],"num":["0","4"]}],"sups":["8I0-8b","16C0-16c","16D0-16a"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[1,6],[0,3]],[[1,2],[0,7]]],"genus":0,"index":48,"label":"16H0-16d","level":16,"maps":[{"den":["1","0","1"],"num":["-1","2","1"]}],"sups":["8I0-8a","16D0-16c","16C0-16d"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[3,2],[0,1]],[[1,2],[0,7]]],"genus":0,"index":48,"label":"16H0-16e","level":16,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["16C0-16c","16D0-16c","8I0-8c"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[3,2],[0,1]],[[5,2],[0,3]]],"genus":0,"index":48,"label":"16H0-16f","level":16,"maps":[{"den":["0","2"],"num":["-2","0","1"]}],"sups":["8I0-8b","16D0-16c","16C0-16d"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[3,2],[0,1]],[[5,4],[0,1]]],"genus":0,"index":48,"label":"16H0-16g","level":16,"maps":[{"den":["0","1"],"num":["1","0","1"]}],"sups":["16C0-16d","16D0-16b","8I0-8c"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[3,4],[0,7]],[[5,6],[0,7]]],"genus":0,"index":48,"label":"16H0-16h","level":16,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["16C0-16c","16D0-16d","8I0-8c"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[5,2],[0,3]],[[1,6],[0,3]]],"genus":0,"index":48,"label":"16H0-16i","level":16,"maps":[{"den":["1","0","1"],"num":["-1","2","1"]}],"sups":["16C0-16c","16D0-16c","8I0-8d"]},{"gens":[[[7,0],[0,7]],[[9,0])json"
    R"json(,[0,9]],[[0,3],[5,2]],[[5,2],[0,3]],[[5,4],[0,1]]],"genus":0,"index":48,"label":"16H0-16j","level":16,"maps":[{"den":["-1","0","1"],"num":["0","2"]}],"sups":["8I0-8d","16D0-16a","16C0-16d"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[5,4],[0,1]],[[1,2],[0,7]]],"genus":0,"index":48,"label":"16H0-16k","level":16,"maps":[{"den":["0","1"],"num":["-1","0","1"]}],"sups":["16C0-16d","16D0-16a","8I0-8c"]},{"gens":[[[7,0],[0,7]],[[9,0],[0,9]],[[0,3],[5,2]],[[7,2],[0,5]],[[7,4],[0,3]]],"genus":0,"index":48,"label":"16H0-16l","level":16,"maps":[{"den":["0","2"],"num":["2","0","1"]}],"sups":["8I0-8a","16D0-16d","16C0-16d"]},{"gens":[[[3,8],[0,11]],[[5,8],[0,13]],[[0,7],[9,2]],[[1,4],[0,5]],[[5,6],[0,3]]],"genus":0,"index":48,"label":"32A0-32a","level":32,"maps":[{"den":["0","0","1"],"num":["2"]}],"sups":["16C0-16a"]},{"gens":[[[3,8],[0,11]],[[5,8],[0,13]],[[0,7],[9,2]],[[5,2],[0,3]],[[5,4],[0,1]]],"genus":0,"index":48,"label":"32A0-32b","level":32,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["16C0-16d"]},{"gens":[[[3,8],[0,11]],[[5,8],[0,13]],[[0,7],[9,2]],[[7,2],[0,1]],[[9,2],[0,3]]],"genus":0,"index":48,"label":"32A0-32c","level":32,"maps":[{"den":["1"],"num":["0","0","1"]}],"sups":["16C0-16a"]},{"gens":[[[3,8],[0,11]],[[5,8],[0,13]],[[0,7],[9,2]],[[7,2],[0,5]],[[7,4],[0,3]]],"genus":0,"index":48,"label":"32A0-32d","level":32,"maps":[{"den":["0","0","1"],"num":["2"]}],"sups":["16C0-16d"]}],"genus1":[{"curve":"256a2","gens":[[[2,1],[3,2]],[[0,3],[5,8]],[[1,0],[0,5]],[[1,8],[0,3]]],"genus":1,"index":24,"label":"16C1-16c","level":16,"maps":[{"den":{"c":["2"],"y":["0"]},"num":{"c":["-1","1"],"y":["0"]}}],"sups":["8D0-8a"]},{"curve":"256a1","gens":[[[2,1],[3,2]],[[0,3],[5,8]],[[3,0],[0,5]],[[1,8],[0,3]]],"genus":1,"index":24,"label":"16C1-16d","level":16,"maps":[{"den":{"c":["1"],"y":["0"]},"num":{"c":["1","1"],"y":["0"]}}],"sups":["8D0-8a"]},{"curve":"256b2","gens":[[[3,0],[0,11]],[[0,3],[5,0]],[[2,3],[9,6]],[[1,0],[0,3]],[[1,0],[0,5]]],"genus":1,"index":24,"label":"16B1-16a","level":16,"maps":[{"den":{"c":["4"],"y":["0"]},"num":{"c":["0","1"],"y":["0"]}}],"sups":["8B0-8a"]},{"curve":"256b1","gens":[[[3,0],[0,11]],[[0,3],[5,0]],[[2,3],[9,6]],[[1,4],[0,3]],[[1,0],[0,5]]],"genus":1,"index":24,"label":"16B1-16c","level":16,"maps":[{"den":{"c":["2"],"y":["0"]},"num":{"c":["0","1"],"y":["0"]}}],"sups":["8B0-8a"]},{"curve":"256a1","gens":[[[3,0],[0,11]],[[0,3],[5,8]],[[1,4],[12,1]],[[1,0],[0,5]],[[1,8],[0,3]]],"genus":1,"index":48,"label":"16I1-16d","level":16,"maps":[{"den":{"c":["1"],"y":["0"]},"num":{"c":["-1","1"],"y":["0"]}}],"sups":["8H0-8a","16E0-16c","16C1-16c"]},{"curve":"256a2","gens":[[[3,0],[0,11]],[[0,3],[5,8]],[[1,4],[12,1]],[[1,8],[0,3]],[[2,3],[5,2]]],"genus":1,"index":48,"label":"16I1-16f","level":16,"maps":[{"den":{"c":["-15","-2","1"],"y":["0"]},"num":{"c":["12","4"],"y":["-4"]}}],"sups":["8H0-8b","16E0-16c","16C1-16d"]},{"curve":"256a2","gens":[[[3,0],[0,11]],[[0,3],[5,8]],[[1,4],[12,1]],[[1,8],[0,5]],[[1,2],[10,3]]],"genus":1,"index":48,"label":"16I1-16g","level":16,"maps":[{"den":{"c":["-11","-2","1"],"y":["0"]},"num":{"c":["-2","-2"],"y":["2"]}}],"sups":["8H0-8d","16E0-16b","16C1-16d"]},{"curve":"256a1","gens":[[[3,0],[0,11]],[[0,3],[5,8]],[[1,4],[12,1]],[[1,8],[0,7]],[[1,2],[10,7]]],"genus":1,"index":48,"label":"16I1-16h","level":16,"maps":[{"den":{"c":["0","1"],"y":["0"]},"num":{"c":["1"],"y":["0"]}}],"sups":["8H0-8j","16E0-16b","16C1-16c"]},{"curve":"256a2","gens":[[[3,0],[0,11]],[[0,3],[5,8]],[[1,4],[12,1]],[[3,0],[0,5]],[[1,8],[0,3]]],"genus":1,"index":48,"label":"16I1-16j","level":16,"maps":[{"den":{"c":["2"],"y":["0"]},"num":{"c":["3","1"],"y":["0"]}}],"sups":["8H0-8a","16E0-16d","16C1-16d"]},{"curve":"256a2","gens":[[[3,0],[0,11]],[[0,3],[5,8]],[[1,4],[12,1]],[[3,0],[0,5]],[[2,3],[5,2]]],"genus":1,"index":48,"label":"16I1-16k","level":16,"maps":[{"den":{"c":["3","1"],"y":["0"]},"num":{"c":["1","-1"],"y":["0"]}}],"sups":["8H0-8j","16E0-16a","16C1-16d"]},{"curve":"256a2","gens":[[[7,0],[0,7]],[[1,8],[0)json"
    R"json(,1]],[[1,4],[4,1]],[[0,3],[5,0]],[[3,0],[0,5]],[[1,2],[2,9]]],"genus":1,"index":48,"label":"8H1-16b","level":16,"maps":[{"den":{"c":["2"],"y":["0"]},"num":{"c":["3","1"],"y":["0"]}}],"sups":["8H0-8i","8K0-16c","8D1-16b"]},{"curve":"256a2","gens":[[[7,0],[0,7]],[[1,8],[0,1]],[[1,4],[4,1]],[[0,3],[5,0]],[[3,0],[0,5]],[[1,2],[6,9]]],"genus":1,"index":48,"label":"8H1-16c","level":16,"maps":[{"den":{"c":["3","1"],"y":["0"]},"num":{"c":["-1","1"],"y":["0"]}}],"sups":["8H0-8j","8K0-16a","8D1-16b"]},{"curve":"256a1","gens":[[[7,0],[0,7]],[[1,8],[0,1]],[[1,4],[4,1]],[[0,3],[5,0]],[[7,0],[0,9]],[[1,2],[2,1]]],"genus":1,"index":48,"label":"8H1-16e","level":16,"maps":[{"den":{"c":["1"],"y":["0"]},"num":{"c":["-1","1"],"y":["0"]}}],"sups":["8H0-8i","8K0-16b","8D1-16c"]},{"curve":"256a1","gens":[[[7,0],[0,7]],[[1,8],[0,1]],[[1,4],[4,1]],[[0,3],[5,0]],[[7,0],[0,9]],[[2,3],[5,2]]],"genus":1,"index":48,"label":"8H1-16g","level":16,"maps":[{"den":{"c":["0","1"],"y":["0"]},"num":{"c":["-1"],"y":["0"]}}],"sups":["8H0-8j","8K0-16d","8D1-16c"]},{"curve":"128a1","gens":[[[3,8],[0,11]],[[0,3],[5,0]],[[5,2],[2,1]],[[3,2],[0,5]],[[5,4],[0,1]]],"genus":1,"index":24,"label":"16D1-16d","level":16,"maps":[{"den":{"c":["2"],"y":["0"]},"num":{"c":["1","1"],"y":["0"]}}],"sups":["8B0-8d"]},{"curve":"256a2","gens":[[[7,0],[0,7]],[[1,8],[0,1]],[[1,4],[4,1]],[[0,3],[5,0]],[[7,4],[0,9]],[[1,2],[2,9]]],"genus":1,"index":48,"label":"8H1-16j","level":16,"maps":[{"den":{"c":["-11","-2","1"],"y":["0"]},"num":{"c":["2","2"],"y":["2"]}}],"sups":["8H0-8k","8K0-16d","8D1-16b"]},{"curve":"256a1","gens":[[[7,0],[0,7]],[[3,4],[0,11]],[[0,3],[5,0]],[[3,0],[0,5]],[[1,2],[2,9]]],"genus":1,"index":24,"label":"8D1-16b","level":16,"maps":[{"den":{"c":["1"],"y":["0"]},"num":{"c":["1","1"],"y":["0"]}}],"sups":["4F0-8b"]},{"curve":"256a2","gens":[[[7,0],[0,7]],[[1,8],[0,1]],[[1,4],[4,1]],[[0,3],[5,0]],[[7,4],[0,9]],[[1,2],[6,9]]],"genus":1,"index":48,"label":"8H1-16k","level":16,"maps":[{"den":{"c":["-15","-2","1"],"y":["0"]},"num":{"c":["12","4"],"y":["-4"]}}],"sups":["8H0-8l","8K0-16b","8D1-16b"]},{"curve":"256a2","gens":[[[7,0],[0,7]],[[3,4],[0,11]],[[0,3],[5,0]],[[3,4],[0,5]],[[1,2],[2,1]]],"genus":1,"index":24,"label":"8D1-16c","level":16,"maps":[{"den":{"c":["2"],"y":["0"]},"num":{"c":["-1","1"],"y":["0"]}}],"sups":["4F0-8b"]},{"curve":"128a2","gens":[[[7,0],[0,7]],[[0,3],[5,0]],[[5,2],[2,1]],[[1,6],[0,7]],[[7,4],[0,3]]],"genus":1,"index":48,"label":"16J1-16e","level":16,"maps":[{"den":{"c":["-8","8"],"y":["0"]},"num":{"c":["-7","2","1"],"y":["0"]}}],"sups":["8B0-8d","8L0-8a","16B0-16b","16D1-16d"]},{"curve":"128a2","gens":[[[7,0],[0,7]],[[0,3],[5,0]],[[5,2],[2,1]],[[5,4],[0,1]],[[3,6],[0,1]]],"genus":1,"index":48,"label":"16J1-16g","level":16,"maps":[{"den":{"c":["2"],"y":["0"]},"num":{"c":["1","-1"],"y":["0"]}}],"sups":["8L0-8b","16B0-16d","16D1-16d"]},{"curve":"256b1","gens":[[[3,0],[0,11]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,0],[0,3]],[[1,0],[0,5]]],"genus":1,"index":48,"label":"16F1-16a","level":16,"maps":[{"den":{"c":["0","1"],"y":["0"]},"num":{"c":["-2"],"y":["0"]}}],"sups":["8H0-8a","16B0-16a","16B1-16a"]},{"curve":"256b2","gens":[[[3,0],[0,11]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,0],[0,5]],[[1,2],[2,3]]],"genus":1,"index":48,"label":"16F1-16c","level":16,"maps":[{"den":{"c":["8","-8","1"],"y":["0"]},"num":{"c":["-8","0","1"],"y":["2"]}}],"sups":["16B0-16c","8H0-8d","16B1-16c"]},{"curve":"256b2","gens":[[[3,0],[0,11]],[[1,4],[4,1]],[[0,3],[5,0]],[[1,4],[0,3]],[[1,0],[0,5]]],"genus":1,"index":48,"label":"16F1-16d","level":16,"maps":[{"den":{"c":["0","1"],"y":["0"]},"num":{"c":["4"],"y":["0"]}}],"sups":["8H0-8e","16B0-16c","16B1-16c"]},{"curve":"256b1","gens":[[[3,0],[0,11]],[[1,4],[4,1]],[[0,3],[5,0]],[[3,0],[0,5]],[[1,2],[2,1]]],"genus":1,"index":48,"label":"16F1-16h","level":16,"maps":[{"den":{"c":["1"],"y":["0"]},"num":{"c":["0","1"],"y":["0"]}}],"sups":["8H0-8i","16B0-16c","16B1-16a"]},{"curve":"256b2","gens":[[[3,0],[0,11]],[[1,4],[4,1]],[[0,3],[5,0]],[[3,4],[0,1]],[[1,2],[2)json"
    R"json(,1]]],"genus":1,"index":48,"label":"16F1-16j","level":16,"maps":[{"den":{"c":["2"],"y":["0"]},"num":{"c":["0","1"],"y":["0"]}}],"sups":["8H0-8f","16B0-16a","16B1-16c"]},{"curve":"256b2","gens":[[[3,0],[0,11]],[[1,4],[4,1]],[[0,3],[5,0]],[[3,4],[0,5]],[[1,2],[2,1]]],"genus":1,"index":48,"label":"16F1-16k","level":16,"maps":[{"den":{"c":["8","4","1"],"y":["0"]},"num":{"c":["-8","0","1"],"y":["2"]}}],"sups":["16B0-16a","8H0-8k","16B1-16c"]},{"curve":"121b1","gens":[[[3,4],[4,2]],[[3,1],[1,8]],[[6,4],[0,5]]],"genus":1,"index":55,"label":"11C1-11a","level":11,"maps":[{"special":"Jxy"}],"sups":["1A0-1a"]}]})json";
  return text;
}

}  // namespace modcurve::data
