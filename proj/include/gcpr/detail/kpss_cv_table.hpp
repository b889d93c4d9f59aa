#pragma once

// Generated by tools/gen_cv_table.cpp: quantiles of the integral of
// squared standard Brownian motion over [0,1].
// seed=20260810 steps=10000 reps=2000000 sample_mean=0.499462983175

namespace gcpr::detail {

inline constexpr int kCvTableSize = 2001;

inline constexpr double kCvTailProb[kCvTableSize] = {
    5e-05,
    5.15205278956e-05,
    5.30872958927e-05,
    5.47017101788e-05,
    5.63652197041e-05,
    5.80793174821e-05,
    5.98455419298e-05,
    6.16654782484e-05,
    6.35407598458e-05,
    6.54730698028e-05,
    6.74641423837e-05,
    6.95157645926e-05,
    7.16297777775e-05,
    7.38080792827e-05,
    7.60526241521e-05,
    7.83654268832e-05,
    8.07485632356e-05,
    8.32041720942e-05,
    8.57344573881e-05,
    8.83416900695e-05,
    9.10282101513e-05,
    9.37964288077e-05,
    9.66488305378e-05,
    9.95879753959e-05,
    0.000102616501289,
    0.000105737126344,
    0.000108952651348,
    0.000112265962262,
    0.000115680032808,
    0.000119197927145,
    0.000122822802612,
    0.000126557912563,
    0.000130406609292,
    0.000134372347036,
    0.000138458685077,
    0.000142669290938,
    0.000147007943673,
    0.000151478537257,
    0.000156085084087,
    0.000160831718575,
    0.000165722700867,
    0.000170762420659,
    0.000175955401141,
    0.000181306303058,
    0.000186819928886,
    0.000192501227153,
    0.000198355296869,
    0.000204387392112,
    0.000210602926736,
    0.000217007479236,
    0.00022360679775,
    0.000230406805222,
    0.000237413604716,
    0.000244633484891,
    0.00025207292565,
    0.000259738603953,
    0.000267637399811,
    0.000275776402457,
    0.000284162916714,
    0.000292804469549,
    0.000301708816827,
    0.000310883950274,
    0.000320338104647,
    0.00033007976513,
    0.000340117674943,
    0.000350460843193,
    0.000361118552961,
    0.000372100369628,
    0.000383416149468,
    0.000395076048485,
    0.000407090531537,
    0.000419470381721,
    0.000432226710057,
    0.000445370965454,
    0.000458914944991,
    0.000472870804502,
    0.000487251069486,
    0.000502068646352,
    0.000517336833998,
    0.000533069335748,
    0.000549280271653,
    0.000565984191164,
    0.000583196086186,
    0.000600931404538,
    0.000619206063817,
    0.00063803646568,
    0.000657439510569,
    0.000677432612878,
    0.000698033716583,
    0.000719261311345,
    0.000741134449107,
    0.000763672761192,
    0.000786896475921,
    0.000810826436772,
    0.000835484121084,
    0.000860891659332,
    0.000887071854993,
    0.000914048205011,
    0.000941844920883,
    0.000970486950393,
    0.001,
    0.00103041055791,
    0.00106174591785,
    0.00109403420358,
    0.00112730439408,
    0.00116158634964,
    0.0011969108386,
    0.00123330956497,
    0.00127081519692,
    0.00130946139606,
    0.00134928284767,
    0.00139031529185,
    0.00143259555555,
    0.00147616158565,
    0.00152105248304,
    0.00156730853766,
    0.00161497126471,
    0.00166408344188,
    0.00171468914776,
    0.00176683380139,
    0.00182056420303,
    0.00187592857615,
    0.00193297661076,
    0.00199175950792,
    0.00205233002578,
    0.00211474252688,
    0.00217905302696,
    0.00224531924523,
    0.00231360065617,
    0.0023839585429,
    0.00245645605223,
    0.00253115825126,
    0.00260813218585,
    0.00268744694072,
    0.00276917370155,
    0.00285338581877,
    0.00294015887345,
    0.00302957074514,
    0.00312170168173,
    0.00321663437151,
    0.00331445401734,
    0.00341524841318,
    0.00351910802283,
    0.00362612606115,
    0.00373639857773,
    0.00385002454306,
    0.00396710593738,
    0.00408774784223,
    0.00421205853471,
    0.00434014958471,
    0.004472135955,
    0.00460813610445,
    0.00474827209431,
    0.00489266969782,
    0.005041458513,
    0.00519477207907,
    0.00535274799621,
    0.00551552804914,
    0.00568325833429,
    0.00585608939099,
    0.00603417633655,
    0.00621767900547,
    0.00640676209294,
    0.0066015953026,
    0.00680235349885,
    0.00700921686386,
    0.00722237105921,
    0.00744200739256,
    0.00766832298935,
    0.0079015209697,
    0.00814181063074,
    0.00838940763443,
    0.00864453420113,
    0.00890741930907,
    0.00917829889981,
    0.00945741609003,
    0.00974502138973,
    0.010041372927,
    0.01034673668,
    0.010661386715,
    0.0109856054331,
    0.0113196838233,
    0.0116639217237,
    0.0120186280908,
    0.0123841212763,
    0.0127607293136,
    0.0131487902114,
    0.0135486522576,
    0.0139606743317,
    0.0143852262269,
    0.0148226889821,
    0.0152734552238,
    0.0157379295184,
    0.0162165287354,
    0.0167096824217,
    0.0172178331866,
    0.0177414370999,
    0.0182809641002,
    0.0188368984177,
    0.0194097390079,
    0.02,
    0.0206,
    0.0212,
    0.0218,
    0.0224,
    0.023,
    0.0236,
    0.0242,
    0.0248,
    0.0254,
    0.026,
    0.0266,
    0.0272,
    0.0278,
    0.0284,
    0.029,
    0.0296,
    0.0302,
    0.0308,
    0.0314,
    0.032,
    0.0326,
    0.0332,
    0.0338,
    0.0344,
    0.035,
    0.0356,
    0.0362,
    0.0368,
    0.0374,
    0.038,
    0.0386,
    0.0392,
    0.0398,
    0.0404,
    0.041,
    0.0416,
    0.0422,
    0.0428,
    0.0434,
    0.044,
    0.0446,
    0.0452,
    0.0458,
    0.0464,
    0.047,
    0.0476,
    0.0482,
    0.0488,
    0.0494,
    0.05,
    0.0506,
    0.0512,
    0.0518,
    0.0524,
    0.053,
    0.0536,
    0.0542,
    0.0548,
    0.0554,
    0.056,
    0.0566,
    0.0572,
    0.0578,
    0.0584,
    0.059,
    0.0596,
    0.0602,
    0.0608,
    0.0614,
    0.062,
    0.0626,
    0.0632,
    0.0638,
    0.0644,
    0.065,
    0.0656,
    0.0662,
    0.0668,
    0.0674,
    0.068,
    0.0686,
    0.0692,
    0.0698,
    0.0704,
    0.071,
    0.0716,
    0.0722,
    0.0728,
    0.0734,
    0.074,
    0.0746,
    0.0752,
    0.0758,
    0.0764,
    0.077,
    0.0776,
    0.0782,
    0.0788,
    0.0794,
    0.08,
    0.0806,
    0.0812,
    0.0818,
    0.0824,
    0.083,
    0.0836,
    0.0842,
    0.0848,
    0.0854,
    0.086,
    0.0866,
    0.0872,
    0.0878,
    0.0884,
    0.089,
    0.0896,
    0.0902,
    0.0908,
    0.0914,
    0.092,
    0.0926,
    0.0932,
    0.0938,
    0.0944,
    0.095,
    0.0956,
    0.0962,
    0.0968,
    0.0974,
    0.098,
    0.0986,
    0.0992,
    0.0998,
    0.1004,
    0.101,
    0.1016,
    0.1022,
    0.1028,
    0.1034,
    0.104,
    0.1046,
    0.1052,
    0.1058,
    0.1064,
    0.107,
    0.1076,
    0.1082,
    0.1088,
    0.1094,
    0.11,
    0.1106,
    0.1112,
    0.1118,
    0.1124,
    0.113,
    0.1136,
    0.1142,
    0.1148,
    0.1154,
    0.116,
    0.1166,
    0.1172,
    0.1178,
    0.1184,
    0.119,
    0.1196,
    0.1202,
    0.1208,
    0.1214,
    0.122,
    0.1226,
    0.1232,
    0.1238,
    0.1244,
    0.125,
    0.1256,
    0.1262,
    0.1268,
    0.1274,
    0.128,
    0.1286,
    0.1292,
    0.1298,
    0.1304,
    0.131,
    0.1316,
    0.1322,
    0.1328,
    0.1334,
    0.134,
    0.1346,
    0.1352,
    0.1358,
    0.1364,
    0.137,
    0.1376,
    0.1382,
    0.1388,
    0.1394,
    0.14,
    0.1406,
    0.1412,
    0.1418,
    0.1424,
    0.143,
    0.1436,
    0.1442,
    0.1448,
    0.1454,
    0.146,
    0.1466,
    0.1472,
    0.1478,
    0.1484,
    0.149,
    0.1496,
    0.1502,
    0.1508,
    0.1514,
    0.152,
    0.1526,
    0.1532,
    0.1538,
    0.1544,
    0.155,
    0.1556,
    0.1562,
    0.1568,
    0.1574,
    0.158,
    0.1586,
    0.1592,
    0.1598,
    0.1604,
    0.161,
    0.1616,
    0.1622,
    0.1628,
    0.1634,
    0.164,
    0.1646,
    0.1652,
    0.1658,
    0.1664,
    0.167,
    0.1676,
    0.1682,
    0.1688,
    0.1694,
    0.17,
    0.1706,
    0.1712,
    0.1718,
    0.1724,
    0.173,
    0.1736,
    0.1742,
    0.1748,
    0.1754,
    0.176,
    0.1766,
    0.1772,
    0.1778,
    0.1784,
    0.179,
    0.1796,
    0.1802,
    0.1808,
    0.1814,
    0.182,
    0.1826,
    0.1832,
    0.1838,
    0.1844,
    0.185,
    0.1856,
    0.1862,
    0.1868,
    0.1874,
    0.188,
    0.1886,
    0.1892,
    0.1898,
    0.1904,
    0.191,
    0.1916,
    0.1922,
    0.1928,
    0.1934,
    0.194,
    0.1946,
    0.1952,
    0.1958,
    0.1964,
    0.197,
    0.1976,
    0.1982,
    0.1988,
    0.1994,
    0.2,
    0.2006,
    0.2012,
    0.2018,
    0.2024,
    0.203,
    0.2036,
    0.2042,
    0.2048,
    0.2054,
    0.206,
    0.2066,
    0.2072,
    0.2078,
    0.2084,
    0.209,
    0.2096,
    0.2102,
    0.2108,
    0.2114,
    0.212,
    0.2126,
    0.2132,
    0.2138,
    0.2144,
    0.215,
    0.2156,
    0.2162,
    0.2168,
    0.2174,
    0.218,
    0.2186,
    0.2192,
    0.2198,
    0.2204,
    0.221,
    0.2216,
    0.2222,
    0.2228,
    0.2234,
    0.224,
    0.2246,
    0.2252,
    0.2258,
    0.2264,
    0.227,
    0.2276,
    0.2282,
    0.2288,
    0.2294,
    0.23,
    0.2306,
    0.2312,
    0.2318,
    0.2324,
    0.233,
    0.2336,
    0.2342,
    0.2348,
    0.2354,
    0.236,
    0.2366,
    0.2372,
    0.2378,
    0.2384,
    0.239,
    0.2396,
    0.2402,
    0.2408,
    0.2414,
    0.242,
    0.2426,
    0.2432,
    0.2438,
    0.2444,
    0.245,
    0.2456,
    0.2462,
    0.2468,
    0.2474,
    0.248,
    0.2486,
    0.2492,
    0.2498,
    0.2504,
    0.251,
    0.2516,
    0.2522,
    0.2528,
    0.2534,
    0.254,
    0.2546,
    0.2552,
    0.2558,
    0.2564,
    0.257,
    0.2576,
    0.2582,
    0.2588,
    0.2594,
    0.26,
    0.2606,
    0.2612,
    0.2618,
    0.2624,
    0.263,
    0.2636,
    0.2642,
    0.2648,
    0.2654,
    0.266,
    0.2666,
    0.2672,
    0.2678,
    0.2684,
    0.269,
    0.2696,
    0.2702,
    0.2708,
    0.2714,
    0.272,
    0.2726,
    0.2732,
    0.2738,
    0.2744,
    0.275,
    0.2756,
    0.2762,
    0.2768,
    0.2774,
    0.278,
    0.2786,
    0.2792,
    0.2798,
    0.2804,
    0.281,
    0.2816,
    0.2822,
    0.2828,
    0.2834,
    0.284,
    0.2846,
    0.2852,
    0.2858,
    0.2864,
    0.287,
    0.2876,
    0.2882,
    0.2888,
    0.2894,
    0.29,
    0.2906,
    0.2912,
    0.2918,
    0.2924,
    0.293,
    0.2936,
    0.2942,
    0.2948,
    0.2954,
    0.296,
    0.2966,
    0.2972,
    0.2978,
    0.2984,
    0.299,
    0.2996,
    0.3002,
    0.3008,
    0.3014,
    0.302,
    0.3026,
    0.3032,
    0.3038,
    0.3044,
    0.305,
    0.3056,
    0.3062,
    0.3068,
    0.3074,
    0.308,
    0.3086,
    0.3092,
    0.3098,
    0.3104,
    0.311,
    0.3116,
    0.3122,
    0.3128,
    0.3134,
    0.314,
    0.3146,
    0.3152,
    0.3158,
    0.3164,
    0.317,
    0.3176,
    0.3182,
    0.3188,
    0.3194,
    0.32,
    0.3206,
    0.3212,
    0.3218,
    0.3224,
    0.323,
    0.3236,
    0.3242,
    0.3248,
    0.3254,
    0.326,
    0.3266,
    0.3272,
    0.3278,
    0.3284,
    0.329,
    0.3296,
    0.3302,
    0.3308,
    0.3314,
    0.332,
    0.3326,
    0.3332,
    0.3338,
    0.3344,
    0.335,
    0.3356,
    0.3362,
    0.3368,
    0.3374,
    0.338,
    0.3386,
    0.3392,
    0.3398,
    0.3404,
    0.341,
    0.3416,
    0.3422,
    0.3428,
    0.3434,
    0.344,
    0.3446,
    0.3452,
    0.3458,
    0.3464,
    0.347,
    0.3476,
    0.3482,
    0.3488,
    0.3494,
    0.35,
    0.3506,
    0.3512,
    0.3518,
    0.3524,
    0.353,
    0.3536,
    0.3542,
    0.3548,
    0.3554,
    0.356,
    0.3566,
    0.3572,
    0.3578,
    0.3584,
    0.359,
    0.3596,
    0.3602,
    0.3608,
    0.3614,
    0.362,
    0.3626,
    0.3632,
    0.3638,
    0.3644,
    0.365,
    0.3656,
    0.3662,
    0.3668,
    0.3674,
    0.368,
    0.3686,
    0.3692,
    0.3698,
    0.3704,
    0.371,
    0.3716,
    0.3722,
    0.3728,
    0.3734,
    0.374,
    0.3746,
    0.3752,
    0.3758,
    0.3764,
    0.377,
    0.3776,
    0.3782,
    0.3788,
    0.3794,
    0.38,
    0.3806,
    0.3812,
    0.3818,
    0.3824,
    0.383,
    0.3836,
    0.3842,
    0.3848,
    0.3854,
    0.386,
    0.3866,
    0.3872,
    0.3878,
    0.3884,
    0.389,
    0.3896,
    0.3902,
    0.3908,
    0.3914,
    0.392,
    0.3926,
    0.3932,
    0.3938,
    0.3944,
    0.395,
    0.3956,
    0.3962,
    0.3968,
    0.3974,
    0.398,
    0.3986,
    0.3992,
    0.3998,
    0.4004,
    0.401,
    0.4016,
    0.4022,
    0.4028,
    0.4034,
    0.404,
    0.4046,
    0.4052,
    0.4058,
    0.4064,
    0.407,
    0.4076,
    0.4082,
    0.4088,
    0.4094,
    0.41,
    0.4106,
    0.4112,
    0.4118,
    0.4124,
    0.413,
    0.4136,
    0.4142,
    0.4148,
    0.4154,
    0.416,
    0.4166,
    0.4172,
    0.4178,
    0.4184,
    0.419,
    0.4196,
    0.4202,
    0.4208,
    0.4214,
    0.422,
    0.4226,
    0.4232,
    0.4238,
    0.4244,
    0.425,
    0.4256,
    0.4262,
    0.4268,
    0.4274,
    0.428,
    0.4286,
    0.4292,
    0.4298,
    0.4304,
    0.431,
    0.4316,
    0.4322,
    0.4328,
    0.4334,
    0.434,
    0.4346,
    0.4352,
    0.4358,
    0.4364,
    0.437,
    0.4376,
    0.4382,
    0.4388,
    0.4394,
    0.44,
    0.4406,
    0.4412,
    0.4418,
    0.4424,
    0.443,
    0.4436,
    0.4442,
    0.4448,
    0.4454,
    0.446,
    0.4466,
    0.4472,
    0.4478,
    0.4484,
    0.449,
    0.4496,
    0.4502,
    0.4508,
    0.4514,
    0.452,
    0.4526,
    0.4532,
    0.4538,
    0.4544,
    0.455,
    0.4556,
    0.4562,
    0.4568,
    0.4574,
    0.458,
    0.4586,
    0.4592,
    0.4598,
    0.4604,
    0.461,
    0.4616,
    0.4622,
    0.4628,
    0.4634,
    0.464,
    0.4646,
    0.4652,
    0.4658,
    0.4664,
    0.467,
    0.4676,
    0.4682,
    0.4688,
    0.4694,
    0.47,
    0.4706,
    0.4712,
    0.4718,
    0.4724,
    0.473,
    0.4736,
    0.4742,
    0.4748,
    0.4754,
    0.476,
    0.4766,
    0.4772,
    0.4778,
    0.4784,
    0.479,
    0.4796,
    0.4802,
    0.4808,
    0.4814,
    0.482,
    0.4826,
    0.4832,
    0.4838,
    0.4844,
    0.485,
    0.4856,
    0.4862,
    0.4868,
    0.4874,
    0.488,
    0.4886,
    0.4892,
    0.4898,
    0.4904,
    0.491,
    0.4916,
    0.4922,
    0.4928,
    0.4934,
    0.494,
    0.4946,
    0.4952,
    0.4958,
    0.4964,
    0.497,
    0.4976,
    0.4982,
    0.4988,
    0.4994,
    0.5,
    0.5006,
    0.5012,
    0.5018,
    0.5024,
    0.503,
    0.5036,
    0.5042,
    0.5048,
    0.5054,
    0.506,
    0.5066,
    0.5072,
    0.5078,
    0.5084,
    0.509,
    0.5096,
    0.5102,
    0.5108,
    0.5114,
    0.512,
    0.5126,
    0.5132,
    0.5138,
    0.5144,
    0.515,
    0.5156,
    0.5162,
    0.5168,
    0.5174,
    0.518,
    0.5186,
    0.5192,
    0.5198,
    0.5204,
    0.521,
    0.5216,
    0.5222,
    0.5228,
    0.5234,
    0.524,
    0.5246,
    0.5252,
    0.5258,
    0.5264,
    0.527,
    0.5276,
    0.5282,
    0.5288,
    0.5294,
    0.53,
    0.5306,
    0.5312,
    0.5318,
    0.5324,
    0.533,
    0.5336,
    0.5342,
    0.5348,
    0.5354,
    0.536,
    0.5366,
    0.5372,
    0.5378,
    0.5384,
    0.539,
    0.5396,
    0.5402,
    0.5408,
    0.5414,
    0.542,
    0.5426,
    0.5432,
    0.5438,
    0.5444,
    0.545,
    0.5456,
    0.5462,
    0.5468,
    0.5474,
    0.548,
    0.5486,
    0.5492,
    0.5498,
    0.5504,
    0.551,
    0.5516,
    0.5522,
    0.5528,
    0.5534,
    0.554,
    0.5546,
    0.5552,
    0.5558,
    0.5564,
    0.557,
    0.5576,
    0.5582,
    0.5588,
    0.5594,
    0.56,
    0.5606,
    0.5612,
    0.5618,
    0.5624,
    0.563,
    0.5636,
    0.5642,
    0.5648,
    0.5654,
    0.566,
    0.5666,
    0.5672,
    0.5678,
    0.5684,
    0.569,
    0.5696,
    0.5702,
    0.5708,
    0.5714,
    0.572,
    0.5726,
    0.5732,
    0.5738,
    0.5744,
    0.575,
    0.5756,
    0.5762,
    0.5768,
    0.5774,
    0.578,
    0.5786,
    0.5792,
    0.5798,
    0.5804,
    0.581,
    0.5816,
    0.5822,
    0.5828,
    0.5834,
    0.584,
    0.5846,
    0.5852,
    0.5858,
    0.5864,
    0.587,
    0.5876,
    0.5882,
    0.5888,
    0.5894,
    0.59,
    0.5906,
    0.5912,
    0.5918,
    0.5924,
    0.593,
    0.5936,
    0.5942,
    0.5948,
    0.5954,
    0.596,
    0.5966,
    0.5972,
    0.5978,
    0.5984,
    0.599,
    0.5996,
    0.6002,
    0.6008,
    0.6014,
    0.602,
    0.6026,
    0.6032,
    0.6038,
    0.6044,
    0.605,
    0.6056,
    0.6062,
    0.6068,
    0.6074,
    0.608,
    0.6086,
    0.6092,
    0.6098,
    0.6104,
    0.611,
    0.6116,
    0.6122,
    0.6128,
    0.6134,
    0.614,
    0.6146,
    0.6152,
    0.6158,
    0.6164,
    0.617,
    0.6176,
    0.6182,
    0.6188,
    0.6194,
    0.62,
    0.6206,
    0.6212,
    0.6218,
    0.6224,
    0.623,
    0.6236,
    0.6242,
    0.6248,
    0.6254,
    0.626,
    0.6266,
    0.6272,
    0.6278,
    0.6284,
    0.629,
    0.6296,
    0.6302,
    0.6308,
    0.6314,
    0.632,
    0.6326,
    0.6332,
    0.6338,
    0.6344,
    0.635,
    0.6356,
    0.6362,
    0.6368,
    0.6374,
    0.638,
    0.6386,
    0.6392,
    0.6398,
    0.6404,
    0.641,
    0.6416,
    0.6422,
    0.6428,
    0.6434,
    0.644,
    0.6446,
    0.6452,
    0.6458,
    0.6464,
    0.647,
    0.6476,
    0.6482,
    0.6488,
    0.6494,
    0.65,
    0.6506,
    0.6512,
    0.6518,
    0.6524,
    0.653,
    0.6536,
    0.6542,
    0.6548,
    0.6554,
    0.656,
    0.6566,
    0.6572,
    0.6578,
    0.6584,
    0.659,
    0.6596,
    0.6602,
    0.6608,
    0.6614,
    0.662,
    0.6626,
    0.6632,
    0.6638,
    0.6644,
    0.665,
    0.6656,
    0.6662,
    0.6668,
    0.6674,
    0.668,
    0.6686,
    0.6692,
    0.6698,
    0.6704,
    0.671,
    0.6716,
    0.6722,
    0.6728,
    0.6734,
    0.674,
    0.6746,
    0.6752,
    0.6758,
    0.6764,
    0.677,
    0.6776,
    0.6782,
    0.6788,
    0.6794,
    0.68,
    0.6806,
    0.6812,
    0.6818,
    0.6824,
    0.683,
    0.6836,
    0.6842,
    0.6848,
    0.6854,
    0.686,
    0.6866,
    0.6872,
    0.6878,
    0.6884,
    0.689,
    0.6896,
    0.6902,
    0.6908,
    0.6914,
    0.692,
    0.6926,
    0.6932,
    0.6938,
    0.6944,
    0.695,
    0.6956,
    0.6962,
    0.6968,
    0.6974,
    0.698,
    0.6986,
    0.6992,
    0.6998,
    0.7004,
    0.701,
    0.7016,
    0.7022,
    0.7028,
    0.7034,
    0.704,
    0.7046,
    0.7052,
    0.7058,
    0.7064,
    0.707,
    0.7076,
    0.7082,
    0.7088,
    0.7094,
    0.71,
    0.7106,
    0.7112,
    0.7118,
    0.7124,
    0.713,
    0.7136,
    0.7142,
    0.7148,
    0.7154,
    0.716,
    0.7166,
    0.7172,
    0.7178,
    0.7184,
    0.719,
    0.7196,
    0.7202,
    0.7208,
    0.7214,
    0.722,
    0.7226,
    0.7232,
    0.7238,
    0.7244,
    0.725,
    0.7256,
    0.7262,
    0.7268,
    0.7274,
    0.728,
    0.7286,
    0.7292,
    0.7298,
    0.7304,
    0.731,
    0.7316,
    0.7322,
    0.7328,
    0.7334,
    0.734,
    0.7346,
    0.7352,
    0.7358,
    0.7364,
    0.737,
    0.7376,
    0.7382,
    0.7388,
    0.7394,
    0.74,
    0.7406,
    0.7412,
    0.7418,
    0.7424,
    0.743,
    0.7436,
    0.7442,
    0.7448,
    0.7454,
    0.746,
    0.7466,
    0.7472,
    0.7478,
    0.7484,
    0.749,
    0.7496,
    0.7502,
    0.7508,
    0.7514,
    0.752,
    0.7526,
    0.7532,
    0.7538,
    0.7544,
    0.755,
    0.7556,
    0.7562,
    0.7568,
    0.7574,
    0.758,
    0.7586,
    0.7592,
    0.7598,
    0.7604,
    0.761,
    0.7616,
    0.7622,
    0.7628,
    0.7634,
    0.764,
    0.7646,
    0.7652,
    0.7658,
    0.7664,
    0.767,
    0.7676,
    0.7682,
    0.7688,
    0.7694,
    0.77,
    0.7706,
    0.7712,
    0.7718,
    0.7724,
    0.773,
    0.7736,
    0.7742,
    0.7748,
    0.7754,
    0.776,
    0.7766,
    0.7772,
    0.7778,
    0.7784,
    0.779,
    0.7796,
    0.7802,
    0.7808,
    0.7814,
    0.782,
    0.7826,
    0.7832,
    0.7838,
    0.7844,
    0.785,
    0.7856,
    0.7862,
    0.7868,
    0.7874,
    0.788,
    0.7886,
    0.7892,
    0.7898,
    0.7904,
    0.791,
    0.7916,
    0.7922,
    0.7928,
    0.7934,
    0.794,
    0.7946,
    0.7952,
    0.7958,
    0.7964,
    0.797,
    0.7976,
    0.7982,
    0.7988,
    0.7994,
    0.8,
    0.8006,
    0.8012,
    0.8018,
    0.8024,
    0.803,
    0.8036,
    0.8042,
    0.8048,
    0.8054,
    0.806,
    0.8066,
    0.8072,
    0.8078,
    0.8084,
    0.809,
    0.8096,
    0.8102,
    0.8108,
    0.8114,
    0.812,
    0.8126,
    0.8132,
    0.8138,
    0.8144,
    0.815,
    0.8156,
    0.8162,
    0.8168,
    0.8174,
    0.818,
    0.8186,
    0.8192,
    0.8198,
    0.8204,
    0.821,
    0.8216,
    0.8222,
    0.8228,
    0.8234,
    0.824,
    0.8246,
    0.8252,
    0.8258,
    0.8264,
    0.827,
    0.8276,
    0.8282,
    0.8288,
    0.8294,
    0.83,
    0.8306,
    0.8312,
    0.8318,
    0.8324,
    0.833,
    0.8336,
    0.8342,
    0.8348,
    0.8354,
    0.836,
    0.8366,
    0.8372,
    0.8378,
    0.8384,
    0.839,
    0.8396,
    0.8402,
    0.8408,
    0.8414,
    0.842,
    0.8426,
    0.8432,
    0.8438,
    0.8444,
    0.845,
    0.8456,
    0.8462,
    0.8468,
    0.8474,
    0.848,
    0.8486,
    0.8492,
    0.8498,
    0.8504,
    0.851,
    0.8516,
    0.8522,
    0.8528,
    0.8534,
    0.854,
    0.8546,
    0.8552,
    0.8558,
    0.8564,
    0.857,
    0.8576,
    0.8582,
    0.8588,
    0.8594,
    0.86,
    0.8606,
    0.8612,
    0.8618,
    0.8624,
    0.863,
    0.8636,
    0.8642,
    0.8648,
    0.8654,
    0.866,
    0.8666,
    0.8672,
    0.8678,
    0.8684,
    0.869,
    0.8696,
    0.8702,
    0.8708,
    0.8714,
    0.872,
    0.8726,
    0.8732,
    0.8738,
    0.8744,
    0.875,
    0.8756,
    0.8762,
    0.8768,
    0.8774,
    0.878,
    0.8786,
    0.8792,
    0.8798,
    0.8804,
    0.881,
    0.8816,
    0.8822,
    0.8828,
    0.8834,
    0.884,
    0.8846,
    0.8852,
    0.8858,
    0.8864,
    0.887,
    0.8876,
    0.8882,
    0.8888,
    0.8894,
    0.89,
    0.8906,
    0.8912,
    0.8918,
    0.8924,
    0.893,
    0.8936,
    0.8942,
    0.8948,
    0.8954,
    0.896,
    0.8966,
    0.8972,
    0.8978,
    0.8984,
    0.899,
    0.8996,
    0.9002,
    0.9008,
    0.9014,
    0.902,
    0.9026,
    0.9032,
    0.9038,
    0.9044,
    0.905,
    0.9056,
    0.9062,
    0.9068,
    0.9074,
    0.908,
    0.9086,
    0.9092,
    0.9098,
    0.9104,
    0.911,
    0.9116,
    0.9122,
    0.9128,
    0.9134,
    0.914,
    0.9146,
    0.9152,
    0.9158,
    0.9164,
    0.917,
    0.9176,
    0.9182,
    0.9188,
    0.9194,
    0.92,
    0.9206,
    0.9212,
    0.9218,
    0.9224,
    0.923,
    0.9236,
    0.9242,
    0.9248,
    0.9254,
    0.926,
    0.9266,
    0.9272,
    0.9278,
    0.9284,
    0.929,
    0.9296,
    0.9302,
    0.9308,
    0.9314,
    0.932,
    0.9326,
    0.9332,
    0.9338,
    0.9344,
    0.935,
    0.9356,
    0.9362,
    0.9368,
    0.9374,
    0.938,
    0.9386,
    0.9392,
    0.9398,
    0.9404,
    0.941,
    0.9416,
    0.9422,
    0.9428,
    0.9434,
    0.944,
    0.9446,
    0.9452,
    0.9458,
    0.9464,
    0.947,
    0.9476,
    0.9482,
    0.9488,
    0.9494,
    0.95,
    0.9506,
    0.9512,
    0.9518,
    0.9524,
    0.953,
    0.9536,
    0.9542,
    0.9548,
    0.9554,
    0.956,
    0.9566,
    0.9572,
    0.9578,
    0.9584,
    0.959,
    0.9596,
    0.9602,
    0.9608,
    0.9614,
    0.962,
    0.9626,
    0.9632,
    0.9638,
    0.9644,
    0.965,
    0.9656,
    0.9662,
    0.9668,
    0.9674,
    0.968,
    0.9686,
    0.9692,
    0.9698,
    0.9704,
    0.971,
    0.9716,
    0.9722,
    0.9728,
    0.9734,
    0.974,
    0.9746,
    0.9752,
    0.9758,
    0.9764,
    0.977,
    0.9776,
    0.9782,
    0.9788,
    0.9794,
    0.98,
    0.980590260992,
    0.981163101582,
    0.9817190359,
    0.9822585629,
    0.982782166813,
    0.983290317578,
    0.983783471265,
    0.984262070482,
    0.984726544776,
    0.985177311018,
    0.985614773773,
    0.986039325668,
    0.986451347742,
    0.986851209789,
    0.987239270686,
    0.987615878724,
    0.987981371909,
    0.988336078276,
    0.988680316177,
    0.989014394567,
    0.989338613285,
    0.98965326332,
    0.989958627073,
    0.99025497861,
    0.99054258391,
    0.9908217011,
    0.991092580691,
    0.991355465799,
    0.991610592366,
    0.991858189369,
    0.99209847903,
    0.992331677011,
    0.992557992607,
    0.992777628941,
    0.992990783136,
    0.993197646501,
    0.993398404697,
    0.993593237907,
    0.993782320995,
    0.993965823663,
    0.994143910609,
    0.994316741666,
    0.994484471951,
    0.994647252004,
    0.994805227921,
    0.994958541487,
    0.995107330302,
    0.995251727906,
    0.995391863896,
    0.995527864045,
    0.995659850415,
    0.995787941465,
    0.995912252158,
    0.996032894063,
    0.996149975457,
    0.996263601422,
    0.996373873939,
    0.996480891977,
    0.996584751587,
    0.996685545983,
    0.996783365628,
    0.996878298318,
    0.996970429255,
    0.997059841127,
    0.997146614181,
    0.997230826298,
    0.997312553059,
    0.997391867814,
    0.997468841749,
    0.997543543948,
    0.997616041457,
    0.997686399344,
    0.997754680755,
    0.997820946973,
    0.997885257473,
    0.997947669974,
    0.998008240492,
    0.998067023389,
    0.998124071424,
    0.998179435797,
    0.998233166199,
    0.998285310852,
    0.998335916558,
    0.998385028735,
    0.998432691462,
    0.998478947517,
    0.998523838414,
    0.998567404444,
    0.998609684708,
    0.998650717152,
    0.998690538604,
    0.998729184803,
    0.998766690435,
    0.998803089161,
    0.99883841365,
    0.998872695606,
    0.998905965796,
    0.998938254082,
    0.998969589442,
    0.999,
    0.99902951305,
    0.999058155079,
    0.999085951795,
    0.999112928145,
    0.999139108341,
    0.999164515879,
    0.999189173563,
    0.999213103524,
    0.999236327239,
    0.999258865551,
    0.999280738689,
    0.999301966283,
    0.999322567387,
    0.999342560489,
    0.999361963534,
    0.999380793936,
    0.999399068595,
    0.999416803914,
    0.999434015809,
    0.999450719728,
    0.999466930664,
    0.999482663166,
    0.999497931354,
    0.999512748931,
    0.999527129195,
    0.999541085055,
    0.999554629035,
    0.99956777329,
    0.999580529618,
    0.999592909468,
    0.999604923952,
    0.999616583851,
    0.99962789963,
    0.999638881447,
    0.999649539157,
    0.999659882325,
    0.999669920235,
    0.999679661895,
    0.99968911605,
    0.999698291183,
    0.99970719553,
    0.999715837083,
    0.999724223598,
    0.9997323626,
    0.999740261396,
    0.999747927074,
    0.999755366515,
    0.999762586395,
    0.999769593195,
    0.999776393202,
    0.999782992521,
    0.999789397073,
    0.999795612608,
    0.999801644703,
    0.999807498773,
    0.999813180071,
    0.999818693697,
    0.999824044599,
    0.999829237579,
    0.999834277299,
    0.999839168281,
    0.999843914916,
    0.999848521463,
    0.999852992056,
    0.999857330709,
    0.999861541315,
    0.999865627653,
    0.999869593391,
    0.999873442087,
    0.999877177197,
    0.999880802073,
    0.999884319967,
    0.999887734038,
    0.999891047349,
    0.999894262874,
    0.999897383499,
    0.999900412025,
    0.999903351169,
    0.999906203571,
    0.99990897179,
    0.99991165831,
    0.999914265543,
    0.999916795828,
    0.999919251437,
    0.999921634573,
    0.999923947376,
    0.999926191921,
    0.999928370222,
    0.999930484235,
    0.999932535858,
    0.99993452693,
    0.99993645924,
    0.999938334522,
    0.999940154458,
    0.999941920683,
    0.99994363478,
    0.99994529829,
    0.999946912704,
    0.999948479472,
    0.99995
};

inline constexpr double kCvQuantile[kCvTableSize] = {
    6.85581064972,
    6.80793796744,
    6.78925675311,
    6.78062277933,
    6.75898500745,
    6.74788494672,
    6.70792255233,
    6.67817171814,
    6.66889776931,
    6.65175260476,
    6.62730972792,
    6.60255015072,
    6.57959023157,
    6.55659679649,
    6.51955077622,
    6.50032765447,
    6.48315375643,
    6.47357149246,
    6.46261034489,
    6.44976259327,
    6.41884226342,
    6.37808810352,
    6.34804411176,
    6.33042682208,
    6.3048035953,
    6.2827726549,
    6.25175555245,
    6.23289961935,
    6.22379668855,
    6.18661648549,
    6.14664951109,
    6.13012277628,
    6.11368010271,
    6.08702201789,
    6.05442797555,
    6.03911172904,
    6.02238001071,
    6.00182149058,
    5.97218693726,
    5.9480457348,
    5.9271810537,
    5.91429040624,
    5.8888012301,
    5.86287041619,
    5.83725460829,
    5.80588992548,
    5.77667637944,
    5.74651308976,
    5.72888335133,
    5.70582936195,
    5.68224069408,
    5.66574251314,
    5.64976644234,
    5.61440314669,
    5.58994575655,
    5.5694767933,
    5.54012618242,
    5.51210800655,
    5.48543241552,
    5.46838280113,
    5.44638782451,
    5.42793204095,
    5.40524776619,
    5.37972789783,
    5.36084545028,
    5.33725442166,
    5.30972188681,
    5.28443641146,
    5.26339169472,
    5.2355637309,
    5.20763182942,
    5.19098765668,
    5.16380071103,
    5.13318280596,
    5.11477458673,
    5.09070145825,
    5.06743882268,
    5.04803291613,
    5.02414439199,
    5.00201262396,
    4.98101755548,
    4.95760848022,
    4.93100866619,
    4.913082522,
    4.8884966445,
    4.86211490897,
    4.8378680148,
    4.80865568577,
    4.78064657417,
    4.75766756992,
    4.73248388783,
    4.7113091713,
    4.69092363167,
    4.67212743903,
    4.65127790446,
    4.62682959823,
    4.60591945629,
    4.58937941205,
    4.56620706296,
    4.54540534072,
    4.52322541659,
    4.50241163481,
    4.47641521264,
    4.45217526744,
    4.434333902,
    4.40614128521,
    4.38662611557,
    4.3603883923,
    4.33640384483,
    4.31729719463,
    4.29448076724,
    4.27283633436,
    4.25129371867,
    4.23099709939,
    4.20883282657,
    4.18690757286,
    4.16567163209,
    4.14129313824,
    4.11530146632,
    4.09509533813,
    4.07187347074,
    4.05001771196,
    4.02831734977,
    4.00977506473,
    3.98544972805,
    3.96333311481,
    3.93816305876,
    3.91506798253,
    3.89023079957,
    3.86730202211,
    3.84190071783,
    3.81862266334,
    3.79472578466,
    3.77030623207,
    3.74690592223,
    3.72552101489,
    3.70049313437,
    3.67874287813,
    3.65881708423,
    3.63881633304,
    3.61521226412,
    3.5936434636,
    3.56981351344,
    3.54626580688,
    3.52332446636,
    3.49812652279,
    3.47303008373,
    3.45065494716,
    3.42871101058,
    3.40653302995,
    3.38580896683,
    3.36331375628,
    3.34191320687,
    3.31837807372,
    3.29771823372,
    3.27377490921,
    3.25102811422,
    3.22573485467,
    3.20006306432,
    3.1782100683,
    3.15643054383,
    3.13284099443,
    3.11108543076,
    3.08906038686,
    3.06579928139,
    3.0444032,
    3.02249702817,
    3.00027587898,
    2.97972542816,
    2.95742336558,
    2.93580659155,
    2.9130022528,
    2.89088340192,
    2.87088610785,
    2.84796312547,
    2.82782427995,
    2.80585721144,
    2.78472156724,
    2.76332150045,
    2.74275451361,
    2.72253943133,
    2.69968910059,
    2.67815349947,
    2.65747957485,
    2.63599572182,
    2.61264223441,
    2.59157935868,
    2.57011449813,
    2.54750828176,
    2.52622732627,
    2.50574070395,
    2.48286173735,
    2.4621683749,
    2.44081729736,
    2.42038007683,
    2.39864093716,
    2.37821854614,
    2.35752500271,
    2.33541609041,
    2.31452079857,
    2.29198156825,
    2.27030864211,
    2.25007290607,
    2.2307894696,
    2.21216334322,
    2.19305326666,
    2.17533953512,
    2.15730585521,
    2.14013122748,
    2.12297433352,
    2.10656973269,
    2.09030080133,
    2.07503336618,
    2.05941744841,
    2.04515864947,
    2.030663299,
    2.01647122858,
    2.00180544808,
    1.98851527941,
    1.97447897892,
    1.96120306074,
    1.94871115154,
    1.9361482263,
    1.92394589651,
    1.91174547558,
    1.89983339998,
    1.88845520445,
    1.87712222471,
    1.86624809042,
    1.85517098248,
    1.843844179,
    1.83239699428,
    1.82183704127,
    1.81152779351,
    1.80166135878,
    1.79128763848,
    1.78170586526,
    1.77156807644,
    1.76178857485,
    1.75189959138,
    1.74218640309,
    1.73298506631,
    1.72359236874,
    1.71408061543,
    1.70552669159,
    1.69631772452,
    1.68744833347,
    1.67901320232,
    1.67069566753,
    1.66216637434,
    1.65404064973,
    1.64590413196,
    1.63786277667,
    1.62992818487,
    1.62210743665,
    1.6143099945,
    1.60643490211,
    1.59895878667,
    1.59136003099,
    1.58382076386,
    1.57652825194,
    1.56930040787,
    1.56250911084,
    1.5555134665,
    1.54841277245,
    1.54148076642,
    1.53480110127,
    1.52843866912,
    1.52182374885,
    1.51522158429,
    1.50855999,
    1.50163720569,
    1.49540211995,
    1.48881937204,
    1.48262524777,
    1.47651095912,
    1.47043277005,
    1.46434495689,
    1.45814025914,
    1.45229972392,
    1.44670396287,
    1.44075233075,
    1.43480862727,
    1.42918890745,
    1.4235290894,
    1.41761747841,
    1.41199894861,
    1.40633668744,
    1.40075470406,
    1.39551010388,
    1.39027440339,
    1.38525776856,
    1.38000736632,
    1.37470412461,
    1.36958330391,
    1.364350332,
    1.35931398727,
    1.35423122784,
    1.34892770824,
    1.34424256121,
    1.33922226482,
    1.33459261017,
    1.32949090142,
    1.32470631557,
    1.31990964957,
    1.31514405792,
    1.31028641785,
    1.30565507622,
    1.30109469687,
    1.29653633118,
    1.29184278892,
    1.28720090612,
    1.28255342657,
    1.27796105733,
    1.27340014613,
    1.26906948584,
    1.26462978633,
    1.2603537353,
    1.25619325782,
    1.25197091592,
    1.24767423463,
    1.24365325746,
    1.23949160076,
    1.23530391919,
    1.23113406092,
    1.22705302708,
    1.22279305709,
    1.21886793295,
    1.21495372915,
    1.21120270375,
    1.20733088043,
    1.20321833495,
    1.19935043139,
    1.1956522822,
    1.19158984027,
    1.18756731128,
    1.18379617222,
    1.17993690934,
    1.17608916302,
    1.17239795956,
    1.16873265158,
    1.16517324933,
    1.16157172781,
    1.15795057159,
    1.15431871329,
    1.1505614503,
    1.14717053769,
    1.14353420817,
    1.14005622105,
    1.13664223996,
    1.13292594969,
    1.129361801,
    1.12590915447,
    1.12255288722,
    1.11923976496,
    1.1157261302,
    1.11229966091,
    1.10902365182,
    1.10558653729,
    1.10229661409,
    1.09877546409,
    1.09550079638,
    1.09228152706,
    1.08908149403,
    1.08601620402,
    1.08269497599,
    1.07957496867,
    1.07634125366,
    1.07310292904,
    1.06994612706,
    1.06690918788,
    1.06374238722,
    1.06069033934,
    1.05759850152,
    1.05445661247,
    1.05144044984,
    1.04837763559,
    1.04545947545,
    1.04246067804,
    1.0393812408,
    1.03641620408,
    1.0332498646,
    1.03029114054,
    1.02735474742,
    1.02449185931,
    1.02165234645,
    1.018723146,
    1.0159038037,
    1.01322407139,
    1.01046659091,
    1.00764470954,
    1.00492978493,
    1.00220329911,
    0.999353054988,
    0.996633040374,
    0.993974594256,
    0.991241504498,
    0.988545329305,
    0.985750100741,
    0.983151121367,
    0.980501308874,
    0.977880107334,
    0.97522717257,
    0.972598965433,
    0.969873125907,
    0.967359690093,
    0.964768670841,
    0.962166202298,
    0.959664985539,
    0.957028845384,
    0.9544700478,
    0.951743629454,
    0.949318034597,
    0.946717444571,
    0.944148851301,
    0.941710505214,
    0.939206062448,
    0.936814822461,
    0.93437049165,
    0.931872520758,
    0.929529903814,
    0.927267870314,
    0.924929839308,
    0.922565155173,
    0.920216961854,
    0.917893940058,
    0.915562488934,
    0.913155062905,
    0.910836800825,
    0.908565735683,
    0.906198877874,
    0.903855777218,
    0.901538749388,
    0.899245082526,
    0.89688224011,
    0.894551547535,
    0.892281606016,
    0.890050739331,
    0.887871394155,
    0.885798456478,
    0.883607273401,
    0.881447384982,
    0.879084858456,
    0.876894386773,
    0.874757259147,
    0.872525953079,
    0.870418475815,
    0.868193478128,
    0.866058526643,
    0.863824369477,
    0.861773940333,
    0.859582954802,
    0.857397499042,
    0.855161862141,
    0.852983563645,
    0.850803787288,
    0.848707132672,
    0.846682999859,
    0.844570434222,
    0.842586310926,
    0.840543769055,
    0.838557227979,
    0.836444570292,
    0.834389096609,
    0.832345150369,
    0.830350671256,
    0.828365102895,
    0.826280498092,
    0.824285501426,
    0.822328975659,
    0.820289562047,
    0.818409304835,
    0.816389384331,
    0.814486139007,
    0.812497876345,
    0.81056243231,
    0.808636790586,
    0.806762060281,
    0.804957644111,
    0.803012484992,
    0.801052899231,
    0.799149879974,
    0.797273917247,
    0.795472737171,
    0.79361567775,
    0.79179309908,
    0.789971512368,
    0.788121285064,
    0.786313529397,
    0.78441737874,
    0.782477358094,
    0.780608987788,
    0.778847582365,
    0.776982413678,
    0.775202071092,
    0.773336551427,
    0.771531652347,
    0.769814093503,
    0.768128961865,
    0.766356919904,
    0.764568343897,
    0.762818059495,
    0.761032859098,
    0.759294753258,
    0.757576206308,
    0.755785583812,
    0.753951150456,
    0.752232145718,
    0.750489947159,
    0.74881925129,
    0.747129163105,
    0.74537771662,
    0.743674967857,
    0.742043661328,
    0.740389405628,
    0.738790715966,
    0.737127970067,
    0.73550064921,
    0.733887600979,
    0.732217083719,
    0.730511011826,
    0.728821513825,
    0.727178606004,
    0.72554050841,
    0.723890122248,
    0.72229084146,
    0.720627140815,
    0.719010274681,
    0.717403405268,
    0.715881572314,
    0.714266814944,
    0.712712638569,
    0.711095582046,
    0.709535139846,
    0.70799085024,
    0.706458749367,
    0.704812293447,
    0.703286286404,
    0.701776941606,
    0.700260775944,
    0.6987374922,
    0.697216093721,
    0.69568201043,
    0.694193094658,
    0.692642941461,
    0.691157396039,
    0.689596311259,
    0.688059892723,
    0.686570954394,
    0.685048665959,
    0.6835036052,
    0.682014546464,
    0.680571748074,
    0.679134179016,
    0.677626039028,
    0.676192416946,
    0.674725297288,
    0.673270015455,
    0.671851959602,
    0.670393700047,
    0.668950267763,
    0.667524683875,
    0.666082189305,
    0.664602115917,
    0.66322941986,
    0.661788139418,
    0.660393584374,
    0.65890212898,
    0.657448666147,
    0.656088156749,
    0.654695233014,
    0.653317576586,
    0.651885095817,
    0.650542963679,
    0.64910705057,
    0.647679830438,
    0.646340349675,
    0.645021798839,
    0.643717401872,
    0.64227837956,
    0.640929628537,
    0.639483837421,
    0.638192912252,
    0.636918847529,
    0.63559937035,
    0.634330835807,
    0.633018145921,
    0.631684451114,
    0.630360385229,
    0.62906022256,
    0.627718924901,
    0.626425636345,
    0.625017887649,
    0.623653549814,
    0.622374037236,
    0.621068939808,
    0.619701332005,
    0.618426833053,
    0.617073021017,
    0.615791105059,
    0.614482767169,
    0.613209416778,
    0.611908082688,
    0.610641269501,
    0.609416745514,
    0.608142437159,
    0.606942156258,
    0.605701868531,
    0.604496394793,
    0.60320749817,
    0.60195017004,
    0.600665878718,
    0.599376257936,
    0.598155652527,
    0.596950188322,
    0.595740690099,
    0.594541937726,
    0.593345982686,
    0.592133613369,
    0.590899931664,
    0.589713353805,
    0.588465626448,
    0.587213769145,
    0.586007450673,
    0.584829265561,
    0.583648677175,
    0.58241192566,
    0.58122044262,
    0.580053640916,
    0.578888111102,
    0.577720546666,
    0.576616616996,
    0.575424440876,
    0.574246460106,
    0.573019396032,
    0.571907740318,
    0.570728010422,
    0.569577599992,
    0.568461674562,
    0.567323675852,
    0.566168357343,
    0.56499682166,
    0.563787129747,
    0.562655874773,
    0.561523909092,
    0.560435897221,
    0.559305771578,
    0.558170282857,
    0.556971940648,
    0.555853711182,
    0.55474180534,
    0.553623292588,
    0.552482382589,
    0.551349500332,
    0.550248280755,
    0.549132032638,
    0.548044769756,
    0.546943324425,
    0.54583244943,
    0.544729419299,
    0.543657593713,
    0.542589959947,
    0.541528528034,
    0.5404234629,
    0.539324297756,
    0.538275564828,
    0.537233109237,
    0.536119784378,
    0.535053784885,
    0.533986814538,
    0.532885494307,
    0.531847711139,
    0.530838010007,
    0.529764200391,
    0.528689562148,
    0.527599727427,
    0.526576418078,
    0.525562818233,
    0.52454318608,
    0.523498426119,
    0.522496585694,
    0.521445123689,
    0.520396638267,
    0.519383255648,
    0.518402562082,
    0.517442690546,
    0.51644709631,
    0.515406757722,
    0.514428768317,
    0.51342221535,
    0.512420829121,
    0.511455565932,
    0.510448634429,
    0.509441388359,
    0.508423859688,
    0.507430526699,
    0.506411074026,
    0.505384701345,
    0.504436966037,
    0.503490390023,
    0.502511007276,
    0.501523977261,
    0.500589133409,
    0.499601297314,
    0.498623938236,
    0.497638708225,
    0.496696210452,
    0.495685938621,
    0.494725695733,
    0.493768063824,
    0.492836665545,
    0.491838026104,
    0.490894417135,
    0.489922489251,
    0.48899873549,
    0.488006641631,
    0.487084820193,
    0.486084059654,
    0.485189254424,
    0.484225739745,
    0.483272548487,
    0.482306555037,
    0.481391809792,
    0.480458493891,
    0.479500090577,
    0.478556810512,
    0.477631217888,
    0.47673777543,
    0.475843602466,
    0.47494215776,
    0.47403045308,
    0.473130987308,
    0.472229571166,
    0.471337718865,
    0.470429296533,
    0.469528636846,
    0.468642700418,
    0.467796807066,
    0.466897511144,
    0.466026224891,
    0.465123249688,
    0.464300904023,
    0.463426541244,
    0.462560576323,
    0.461664066837,
    0.46073811794,
    0.459862976361,
    0.458980723176,
    0.458115339742,
    0.457312414574,
    0.456481526855,
    0.455635334236,
    0.454772326804,
    0.453903037817,
    0.453039163601,
    0.452182602549,
    0.45133878503,
    0.450434025317,
    0.449601649221,
    0.448744428001,
    0.447917513995,
    0.447075224068,
    0.446198038522,
    0.445349174822,
    0.44451787499,
    0.443721417413,
    0.442846553373,
    0.441997456327,
    0.441170085156,
    0.440327070435,
    0.439523974624,
    0.438701106207,
    0.437875053505,
    0.437035296461,
    0.436283449537,
    0.435450785942,
    0.434669707823,
    0.433878538598,
    0.433095932786,
    0.432280015453,
    0.431495893094,
    0.430683660942,
    0.429880068238,
    0.429067168066,
    0.428283281451,
    0.427477104625,
    0.426639515372,
    0.425828167871,
    0.425044759678,
    0.424293270049,
    0.423520524708,
    0.422783419861,
    0.422015155396,
    0.421248021737,
    0.420506597877,
    0.419756067103,
    0.418972905399,
    0.418142068615,
    0.417403096638,
    0.416614569828,
    0.41581572655,
    0.415052480879,
    0.4142645184,
    0.413499867745,
    0.412720347924,
    0.411938450246,
    0.411174627706,
    0.410413259234,
    0.409635491193,
    0.408847523984,
    0.408077309326,
    0.407342586917,
    0.406560831555,
    0.405814354917,
    0.4050324672,
    0.404291296773,
    0.403551183799,
    0.402825058075,
    0.4020964612,
    0.401343692257,
    0.400585200932,
    0.399881126737,
    0.399142974832,
    0.398428677021,
    0.397678691626,
    0.396917872007,
    0.396190987915,
    0.395419031076,
    0.394682654967,
    0.39393395051,
    0.393238347537,
    0.392504242636,
    0.391780965606,
    0.391054023309,
    0.390349113968,
    0.389627797187,
    0.388942550703,
    0.388258095365,
    0.38755237632,
    0.386863164056,
    0.386170307985,
    0.385442082175,
    0.384743210989,
    0.38401805961,
    0.383304420744,
    0.38259652724,
    0.381891388482,
    0.381213707009,
    0.380526870123,
    0.379841608113,
    0.379135840258,
    0.378442685561,
    0.377767931065,
    0.377062311364,
    0.376409290332,
    0.375748054807,
    0.375036739937,
    0.374344387894,
    0.37364179388,
    0.372934404743,
    0.372268926831,
    0.371575545854,
    0.37090175247,
    0.370264449083,
    0.369622192986,
    0.368939345224,
    0.368256334287,
    0.367602304733,
    0.366961336055,
    0.366293145554,
    0.365640112521,
    0.364957270856,
    0.364284273937,
    0.363632600066,
    0.362994617522,
    0.362335019349,
    0.361658234001,
    0.360981793889,
    0.360340325696,
    0.359680185647,
    0.358996592524,
    0.358368679767,
    0.357700929298,
    0.357089365012,
    0.356432674885,
    0.355782288543,
    0.35512715492,
    0.354464379,
    0.353827210442,
    0.353196015841,
    0.352567934766,
    0.351906503221,
    0.351323438723,
    0.350687426699,
    0.350043464388,
    0.349421761213,
    0.348796975566,
    0.348194104714,
    0.347565983811,
    0.346934616778,
    0.34632654476,
    0.345698966306,
    0.345079187257,
    0.344463123076,
    0.343842263566,
    0.343227175771,
    0.342636128966,
    0.341999959001,
    0.341403601446,
    0.340750202021,
    0.340146784856,
    0.339536914933,
    0.338950672682,
    0.338340494464,
    0.337701595888,
    0.337125090239,
    0.336529011033,
    0.335916608096,
    0.335321155372,
    0.334713498501,
    0.334101297804,
    0.333490369247,
    0.332888581785,
    0.332302344553,
    0.331706763453,
    0.331103939676,
    0.330531752611,
    0.329952920577,
    0.329358949324,
    0.328774888237,
    0.328178778535,
    0.327604937215,
    0.327020540668,
    0.326434827518,
    0.325848898764,
    0.325277023007,
    0.324724469525,
    0.324180942433,
    0.323613960258,
    0.32306793903,
    0.322495675892,
    0.321924239138,
    0.321342902155,
    0.320763060129,
    0.320210445123,
    0.319589845565,
    0.319014912614,
    0.318431371518,
    0.317850409613,
    0.317285089103,
    0.316734734075,
    0.316184465335,
    0.315614463118,
    0.315036536419,
    0.314466061578,
    0.313893304853,
    0.313354758902,
    0.312822200996,
    0.312259132767,
    0.31172505999,
    0.311200534372,
    0.310628282682,
    0.310072012354,
    0.309520746915,
    0.308987561362,
    0.308435073069,
    0.307880847014,
    0.307361699187,
    0.306827779939,
    0.306274851433,
    0.305698494015,
    0.30514551083,
    0.304608602097,
    0.304067164489,
    0.303508013912,
    0.302981035931,
    0.30242854206,
    0.301900935978,
    0.30136012716,
    0.300834081544,
    0.300331793121,
    0.299800381451,
    0.299280745677,
    0.298758177771,
    0.29824197441,
    0.297716573143,
    0.297174549596,
    0.296671941104,
    0.296156699845,
    0.295604573323,
    0.295070488841,
    0.294547565575,
    0.294041841406,
    0.293523808912,
    0.292981850154,
    0.292446508035,
    0.29195962995,
    0.291456310082,
    0.290919778704,
    0.29041342481,
    0.289898618892,
    0.289380426568,
    0.288857958472,
    0.288336021527,
    0.287839282699,
    0.287281644896,
    0.286784727481,
    0.286293975977,
    0.285795230479,
    0.285290009516,
    0.28478464904,
    0.284271936918,
    0.283749212356,
    0.283275140965,
    0.282782090207,
    0.282297032853,
    0.281787196815,
    0.281294237027,
    0.280807807251,
    0.280328996668,
    0.279841673519,
    0.279318385149,
    0.278807962898,
    0.278330049476,
    0.277845139765,
    0.277353794204,
    0.276859444736,
    0.276377446961,
    0.275906942634,
    0.275433543455,
    0.274956767181,
    0.274464587546,
    0.273986327847,
    0.273532622286,
    0.2730343786,
    0.27256396024,
    0.272087162972,
    0.271623412271,
    0.271156226725,
    0.270695432695,
    0.270203735796,
    0.26974514144,
    0.269281440271,
    0.268794972138,
    0.268325531774,
    0.267865074446,
    0.267394327168,
    0.266934861234,
    0.266463432795,
    0.265998570513,
    0.265544360194,
    0.265077604515,
    0.264621603969,
    0.264160356661,
    0.263688250971,
    0.263252112668,
    0.262774766857,
    0.262305690116,
    0.261870801144,
    0.261410109471,
    0.260919149803,
    0.260450474083,
    0.260007092801,
    0.259540635427,
    0.259091049779,
    0.258650430761,
    0.258203566017,
    0.257736048027,
    0.257288751479,
    0.25681757652,
    0.256362460802,
    0.255932706356,
    0.25549201134,
    0.255034141229,
    0.254578458916,
    0.254111250249,
    0.253678775466,
    0.253234079378,
    0.252795514712,
    0.252328694749,
    0.251876690514,
    0.251455064434,
    0.251014071303,
    0.250588703185,
    0.250155395114,
    0.24973966173,
    0.249291768494,
    0.248859565112,
    0.248433335536,
    0.247979661064,
    0.247551661046,
    0.247137787351,
    0.24669622312,
    0.2462633687,
    0.245823905304,
    0.245386932733,
    0.244949092907,
    0.244512364177,
    0.244089514491,
    0.243656273605,
    0.243249612078,
    0.242839897825,
    0.242424392741,
    0.241995237176,
    0.241568056099,
    0.241158093863,
    0.240748028092,
    0.24033549961,
    0.239918539739,
    0.239508748659,
    0.23910683691,
    0.238673363343,
    0.238240506502,
    0.237847837436,
    0.237426978468,
    0.237013243365,
    0.23658052275,
    0.236184309205,
    0.235778516244,
    0.235357270126,
    0.234944269686,
    0.234538903109,
    0.234145144465,
    0.233717246411,
    0.233324116637,
    0.232890976875,
    0.232475776663,
    0.232080347834,
    0.231668564518,
    0.231260054091,
    0.230861266694,
    0.230490708443,
    0.230097592349,
    0.229694332019,
    0.229299921293,
    0.228904182277,
    0.228495943179,
    0.228101333508,
    0.22768759137,
    0.2272809044,
    0.226863839258,
    0.226456994778,
    0.22606045438,
    0.225661388639,
    0.225258440123,
    0.22485654206,
    0.224444276931,
    0.224058762081,
    0.223656754236,
    0.223243835305,
    0.222855232835,
    0.222462702842,
    0.222084505287,
    0.221668221433,
    0.221286460056,
    0.220874520405,
    0.220517595752,
    0.220136721137,
    0.219743090902,
    0.219365728176,
    0.218967290139,
    0.218585292748,
    0.218208261565,
    0.217824499226,
    0.217466982179,
    0.217085155852,
    0.216715830582,
    0.216317634382,
    0.215936094834,
    0.215559388925,
    0.215165278845,
    0.214779632205,
    0.214398910554,
    0.214023083751,
    0.213647307985,
    0.213265988224,
    0.212913345333,
    0.212523016651,
    0.212133193193,
    0.211770884817,
    0.211401360108,
    0.211046290584,
    0.210678572429,
    0.210309379851,
    0.209952907161,
    0.209587724109,
    0.209206912872,
    0.208822731009,
    0.208462071747,
    0.208102322235,
    0.207709503057,
    0.20735521552,
    0.206974965164,
    0.206607480109,
    0.206253056857,
    0.205895439666,
    0.205498631767,
    0.205122271467,
    0.204763326859,
    0.204391984089,
    0.204032903658,
    0.203664674139,
    0.203293797025,
    0.202925478658,
    0.202568871366,
    0.202196045041,
    0.201830635106,
    0.201486444999,
    0.201137022794,
    0.200804354319,
    0.200454322136,
    0.200110998079,
    0.199750038535,
    0.199401577177,
    0.199049216057,
    0.198696726118,
    0.198350108746,
    0.197989772957,
    0.197638424317,
    0.197307616435,
    0.196977344243,
    0.196634696187,
    0.196284633205,
    0.195941590574,
    0.195603239968,
    0.195263801417,
    0.194918187855,
    0.194579940589,
    0.194215698674,
    0.193884646619,
    0.193536674855,
    0.19318556063,
    0.192844115899,
    0.192505448144,
    0.192170563129,
    0.191823071143,
    0.191489805722,
    0.191132892916,
    0.19078664589,
    0.190431422085,
    0.190084143242,
    0.189734271955,
    0.189386997307,
    0.189040722918,
    0.188713970977,
    0.18837254918,
    0.188021730145,
    0.187670580225,
    0.187333738715,
    0.186998329268,
    0.186674097876,
    0.186332838448,
    0.186001500532,
    0.185665425715,
    0.185344997031,
    0.185018837943,
    0.184696336857,
    0.184338688889,
    0.1840055819,
    0.183685296776,
    0.183353080173,
    0.183030707648,
    0.182690105386,
    0.182364380892,
    0.1820278603,
    0.181701709885,
    0.181371322923,
    0.181047398001,
    0.180734820027,
    0.18041204257,
    0.180083650868,
    0.179753742336,
    0.179411874777,
    0.179090675721,
    0.178773031075,
    0.178447098714,
    0.178122152657,
    0.177811616819,
    0.177494317239,
    0.177160458987,
    0.176826662563,
    0.176511100719,
    0.176179327118,
    0.175859657756,
    0.175549751959,
    0.175222657333,
    0.174916019783,
    0.174609202049,
    0.174278014689,
    0.173969629193,
    0.173653838709,
    0.173342252258,
    0.173025928494,
    0.172705365893,
    0.172403984208,
    0.172079564338,
    0.171770043248,
    0.171453480682,
    0.171133234587,
    0.170810905305,
    0.170504824465,
    0.170189384725,
    0.16989741495,
    0.16957754044,
    0.169274884544,
    0.168962822452,
    0.168655579738,
    0.168340248281,
    0.168025024546,
    0.167705630834,
    0.1674088202,
    0.167106543825,
    0.166785932311,
    0.166478982127,
    0.166179013403,
    0.165866595387,
    0.165560270875,
    0.165243188321,
    0.164950896301,
    0.164639922579,
    0.164340592448,
    0.164040686352,
    0.163733992334,
    0.16342599205,
    0.163126520992,
    0.162835201697,
    0.162544416635,
    0.162257461929,
    0.161970352206,
    0.161656650674,
    0.161373689124,
    0.161073839462,
    0.160769842283,
    0.160468925413,
    0.160184022703,
    0.159880723696,
    0.159580315081,
    0.159282831862,
    0.158983209099,
    0.158676876289,
    0.158380145129,
    0.158088219576,
    0.157794983831,
    0.1575064294,
    0.157191024431,
    0.156892022131,
    0.156576335995,
    0.156285661986,
    0.156004559252,
    0.155717551489,
    0.155422068681,
    0.155132147438,
    0.154834579206,
    0.154557111425,
    0.154273639246,
    0.15398788842,
    0.153708620484,
    0.153423862612,
    0.153135250537,
    0.152850253393,
    0.152573482599,
    0.152300422325,
    0.152021943418,
    0.151733155266,
    0.151454211688,
    0.151173313169,
    0.150877282079,
    0.150580514354,
    0.150300808905,
    0.150004058007,
    0.149724184333,
    0.149440552527,
    0.149161250466,
    0.148872428049,
    0.148571965296,
    0.148287024004,
    0.147995686735,
    0.147715933866,
    0.147443860545,
    0.147155566671,
    0.146875270881,
    0.14659876728,
    0.146333653066,
    0.146060646941,
    0.145782678336,
    0.145490386641,
    0.14521140537,
    0.144923509587,
    0.144632299053,
    0.144354045051,
    0.144079496484,
    0.143810050362,
    0.143526564815,
    0.14323576915,
    0.142962694509,
    0.142695070825,
    0.142421251119,
    0.142146875585,
    0.141854074822,
    0.141598512247,
    0.141329039427,
    0.141055665824,
    0.140781571021,
    0.140520457881,
    0.140236670231,
    0.139963780278,
    0.139686124341,
    0.139430320795,
    0.139167555695,
    0.138895449051,
    0.138618636678,
    0.138335325356,
    0.13805920431,
    0.137782864554,
    0.137515492825,
    0.137238267053,
    0.136961687492,
    0.136705325597,
    0.136444976085,
    0.136176036601,
    0.13591100918,
    0.135647673256,
    0.135394757961,
    0.13514817986,
    0.134886909626,
    0.134626741642,
    0.134374137081,
    0.134098896846,
    0.133837043482,
    0.133573495127,
    0.13330933263,
    0.133029303151,
    0.132767074879,
    0.132506285221,
    0.132231698188,
    0.131970665252,
    0.131711343201,
    0.13144654972,
    0.13117979485,
    0.130907043227,
    0.130650570165,
    0.130387450002,
    0.130126768082,
    0.129863443758,
    0.129604946416,
    0.129332640509,
    0.129067453513,
    0.128808040872,
    0.128556308007,
    0.128295762838,
    0.12803949886,
    0.127786296113,
    0.127538098674,
    0.127279154781,
    0.127032009629,
    0.126777074873,
    0.126517955984,
    0.126254824329,
    0.125986768529,
    0.125716587564,
    0.125468227907,
    0.125199369686,
    0.124934964688,
    0.12467831003,
    0.124426324957,
    0.124167921788,
    0.123916898993,
    0.123670730864,
    0.123422323939,
    0.123170366334,
    0.122919628199,
    0.122669582239,
    0.122412342191,
    0.122164002458,
    0.121909791723,
    0.12165287235,
    0.12140988981,
    0.121161168157,
    0.120915068176,
    0.120651112648,
    0.120407989347,
    0.120141279976,
    0.119887387817,
    0.119631652517,
    0.119384395229,
    0.119134217979,
    0.118885243597,
    0.11864035522,
    0.118394012855,
    0.118143602803,
    0.117903067119,
    0.117655816793,
    0.117411492385,
    0.11716766629,
    0.116918622516,
    0.116664027186,
    0.116423313886,
    0.116178880452,
    0.115927309388,
    0.115681674339,
    0.115435810259,
    0.115195703212,
    0.114960204532,
    0.114716240541,
    0.114472459716,
    0.114227259473,
    0.113992587608,
    0.113742551825,
    0.113489648121,
    0.113221982888,
    0.112978839322,
    0.112736102366,
    0.112488641988,
    0.112244970663,
    0.112010827707,
    0.111758367231,
    0.111514746226,
    0.111268120959,
    0.111018519843,
    0.110782732235,
    0.110541811757,
    0.110306562351,
    0.110068693908,
    0.109822146822,
    0.109579806555,
    0.109348413772,
    0.109105984733,
    0.108861389593,
    0.1086371851,
    0.108401804949,
    0.108163480001,
    0.107918742402,
    0.107683942425,
    0.107447558508,
    0.107206031949,
    0.106972200331,
    0.106741140994,
    0.106518527693,
    0.106280656183,
    0.106056949051,
    0.105831739043,
    0.105607445391,
    0.105358160466,
    0.105117930892,
    0.104886167493,
    0.104641238931,
    0.104402082851,
    0.104167323295,
    0.103928359674,
    0.103690232979,
    0.103452294014,
    0.103212891554,
    0.1029736134,
    0.102730453657,
    0.10248694053,
    0.102255319834,
    0.102019336428,
    0.101788122697,
    0.101558350136,
    0.101322740372,
    0.101089343476,
    0.10084834106,
    0.100599539428,
    0.100362414181,
    0.100133870436,
    0.0999135734494,
    0.0996778854863,
    0.0994466517105,
    0.0992163615082,
    0.098996319848,
    0.0987633508289,
    0.0985277995197,
    0.0982784080632,
    0.0980413270737,
    0.0978081559276,
    0.0975759957588,
    0.0973389089737,
    0.0971110803117,
    0.0968744174328,
    0.0966470648251,
    0.096409312478,
    0.0961785051546,
    0.0959500021677,
    0.0957194710851,
    0.0954941359509,
    0.0952543134041,
    0.0950233809343,
    0.094783404312,
    0.0945571556409,
    0.0943111600945,
    0.0940788585345,
    0.0938452552313,
    0.0935930850622,
    0.0933610667015,
    0.0931248141423,
    0.0928683186311,
    0.0926436539328,
    0.0924186349558,
    0.0921799652286,
    0.0919470423861,
    0.0917145873644,
    0.0914926887026,
    0.0912629862064,
    0.0910346377463,
    0.0907930909092,
    0.0905764201672,
    0.0903454664576,
    0.0901134528692,
    0.0898821816334,
    0.0896638961156,
    0.089429750201,
    0.0891919413066,
    0.0889575007418,
    0.0887238476757,
    0.0884999443627,
    0.0882737866348,
    0.088043516846,
    0.0878059087949,
    0.0875751696482,
    0.0873478183211,
    0.0871131286246,
    0.0868816032924,
    0.086651425202,
    0.0864312970364,
    0.0862016966894,
    0.0859678217616,
    0.0857310867978,
    0.0855133568217,
    0.0852878494678,
    0.0850679774801,
    0.0848324669138,
    0.084608611138,
    0.0843766141218,
    0.0841457432254,
    0.0839161567335,
    0.0836829685536,
    0.0834597854933,
    0.0832194194777,
    0.0829939327231,
    0.0827534881527,
    0.0825048107209,
    0.0822741953461,
    0.0820481323952,
    0.0818095267867,
    0.0815893648259,
    0.0813584365007,
    0.0811377998544,
    0.0809133142881,
    0.0806815791596,
    0.0804464954921,
    0.0802196302869,
    0.0799797713274,
    0.0797568575219,
    0.079537321548,
    0.0793087243569,
    0.0790710416098,
    0.0788367783225,
    0.0786051919129,
    0.0783773596416,
    0.0781576761506,
    0.0779297449274,
    0.0777034248539,
    0.0774770242486,
    0.077243981662,
    0.0770137812965,
    0.0767891577318,
    0.0765547820731,
    0.0763278172257,
    0.0760959335803,
    0.0758681628609,
    0.0756458671931,
    0.07541066816,
    0.0751768313461,
    0.0749563454575,
    0.0747314465532,
    0.0745153493429,
    0.0742894553174,
    0.0740581848056,
    0.0738249711468,
    0.0735897304995,
    0.0733596110347,
    0.0731318660801,
    0.072886169142,
    0.0726625249756,
    0.0724225721401,
    0.0721858168268,
    0.0719501623179,
    0.0717192099197,
    0.0714906303765,
    0.0712543876086,
    0.071019736176,
    0.0707910933233,
    0.0705572779741,
    0.0703186595667,
    0.070080280289,
    0.0698511871143,
    0.069622358052,
    0.069377081587,
    0.0691458411336,
    0.068907419074,
    0.0686677802743,
    0.0684412471003,
    0.0682152380921,
    0.0679682322581,
    0.0677350557672,
    0.0674986484578,
    0.0672515486508,
    0.067013750399,
    0.0667786670569,
    0.0665319384403,
    0.0662874512691,
    0.066060587618,
    0.0658165491811,
    0.0655710928419,
    0.0653300064934,
    0.065092676741,
    0.0648496261895,
    0.0645989985381,
    0.0643577292051,
    0.0641115878754,
    0.0638648652112,
    0.063624271517,
    0.0633780874715,
    0.0631358559728,
    0.0628924061284,
    0.0626512874742,
    0.0624060792767,
    0.0621547403795,
    0.0619066302629,
    0.0616608797257,
    0.061411572519,
    0.0611500418566,
    0.0609056067114,
    0.0606538805348,
    0.0604090568113,
    0.0601628492138,
    0.0599130873397,
    0.0596696980705,
    0.0594138929421,
    0.0591445968811,
    0.0588798244753,
    0.0586275937918,
    0.0583827830498,
    0.0581292688483,
    0.0578823463472,
    0.0576376276322,
    0.0573944220005,
    0.0571219753489,
    0.0568525380945,
    0.0565898447101,
    0.0563275955385,
    0.0560638489262,
    0.0558030497313,
    0.0555400254744,
    0.0552730602302,
    0.0550091348834,
    0.0547460393029,
    0.054484129265,
    0.0542152201253,
    0.0539350262711,
    0.0536762857565,
    0.0534015775771,
    0.0531304729484,
    0.0528618379708,
    0.0525964931261,
    0.0523256619003,
    0.0520473829288,
    0.0517815159641,
    0.0515051806672,
    0.0512260898856,
    0.050937853175,
    0.0506411196896,
    0.0503557493361,
    0.0500752041265,
    0.0497708185258,
    0.0494953346462,
    0.0492041573929,
    0.0489056453579,
    0.0486022287108,
    0.0483136854574,
    0.0480166121351,
    0.0476962540366,
    0.0473913967152,
    0.0470834232391,
    0.0467645222488,
    0.0464550670592,
    0.0461464397408,
    0.0458231031031,
    0.045489614035,
    0.0451749020384,
    0.0448495722496,
    0.0445152145018,
    0.0441946418745,
    0.0438557308677,
    0.0435075300395,
    0.0431657021944,
    0.0428175819691,
    0.0424717748738,
    0.0421374383402,
    0.0417816847432,
    0.0414221348624,
    0.0410511025625,
    0.0406935082889,
    0.0403498966639,
    0.040004517071,
    0.0396620564425,
    0.0393311778306,
    0.0390086504662,
    0.0386850537496,
    0.0383455099529,
    0.0380245471472,
    0.0377363388789,
    0.0374359860461,
    0.0371279739907,
    0.0368237700202,
    0.0365399068682,
    0.0362462298207,
    0.0359715778028,
    0.0357050271416,
    0.0354288503368,
    0.0351574389645,
    0.0348856228108,
    0.0346318692501,
    0.034388150956,
    0.0341413779563,
    0.0339000248568,
    0.0336668539846,
    0.0334303699417,
    0.033195456043,
    0.0329523862436,
    0.0327332858664,
    0.0325151038783,
    0.0322740956097,
    0.0320608500595,
    0.0318313428689,
    0.0316231407664,
    0.0314032252723,
    0.0311758247039,
    0.0309560753256,
    0.0307477925268,
    0.0305445126438,
    0.0303595029307,
    0.0301623808687,
    0.0299551701388,
    0.0297747946258,
    0.029587578726,
    0.0293915703314,
    0.02918754791,
    0.0289827710923,
    0.0287908890489,
    0.0286039558719,
    0.0284122144077,
    0.028238446657,
    0.0280670971215,
    0.0278862061436,
    0.0277120224879,
    0.0275462370374,
    0.0273846575073,
    0.0272238504211,
    0.027051241513,
    0.0268735213885,
    0.0267386793838,
    0.0265528583653,
    0.0263799061875,
    0.026223113284,
    0.0260723650069,
    0.0259151437879,
    0.0257800097531,
    0.0256349594872,
    0.0254862202751,
    0.0253590330135,
    0.0252137136883,
    0.0250782830732,
    0.0249497430933,
    0.0248315610273,
    0.024713273788,
    0.0245694524831,
    0.0244229648995,
    0.0243065927991,
    0.0241501203033,
    0.0240332487195,
    0.0239334277293,
    0.0238063664043,
    0.0236938017671,
    0.0235753149524,
    0.0234512656898,
    0.0233415014322,
    0.0232268972347,
    0.0231209566302,
    0.0230050327796,
    0.0228918347591,
    0.0227570320651,
    0.0226413341644,
    0.0225149352486,
    0.0224096150238,
    0.0222768782907,
    0.0221723529581,
    0.0220759328587,
    0.0219754727492,
    0.0218888452888,
    0.0218096597847,
    0.0217106913365,
    0.0215925656808,
    0.0214931517421,
    0.0213877777711,
    0.0212715949097,
    0.0211727707932,
    0.0210796630024,
    0.0209795873592,
    0.0208866368214,
    0.0207973141174,
    0.0206983101837,
    0.020624709441,
    0.0205146471742,
    0.0203906476002,
    0.020313681249,
    0.0202441347993,
    0.0201720348969,
    0.020091254323,
    0.0200096438282,
    0.0199006831366,
    0.0197930634483,
    0.01970995309,
    0.0196428744788,
    0.0195576643439,
    0.019491165163,
    0.0193925393864,
    0.0192884548401,
    0.0191715315534,
    0.0190890890009,
    0.0189989502359,
    0.018920550639,
    0.0188276183508,
    0.0187676680459,
    0.0186975912888,
    0.018627960247,
    0.0185457842209,
    0.0184946017915,
    0.0184184606416,
    0.018351313978,
    0.0182907743881,
    0.0182415157014,
    0.0181714539207,
    0.0181181391138,
    0.018013650275,
    0.017961569823,
    0.0178835913064,
    0.0178144211488,
    0.017756080771,
    0.0176507437238,
    0.0175449643904,
    0.0175059925848,
    0.0174264102375,
    0.0173698701228,
    0.0173035734031,
    0.0172149746429,
    0.0171611229678,
    0.0171007421302,
    0.0170407443997,
    0.0169885436377,
    0.0168803388535,
    0.0168114365715,
    0.0167562213746,
    0.0167002042902,
    0.0166484675091,
    0.0165852465483,
    0.0165425878178,
    0.0164971730652,
    0.0164629966928,
    0.0163824335288,
    0.0163069696578,
    0.0162174369413,
    0.0161234217411,
    0.0160703641903,
    0.0159890024766,
    0.0158941242635,
    0.0158629255176,
    0.015761739444,
    0.0157240410527,
    0.0156353742206,
    0.0155806219557,
    0.0155392553288,
    0.0154951970616,
    0.0154456028958,
    0.0153738354886,
    0.0152791314457,
    0.0152217370078,
    0.0151750910988,
    0.0151220396769,
    0.0151086768296,
    0.0150587970963,
    0.0150070316997,
    0.0149500191536,
    0.0149082381329,
    0.0148898367595,
    0.0148342466963,
    0.014808951354,
    0.0147523199734,
    0.014722726457,
    0.0146746520438,
    0.0146560743548
};

}  // namespace gcpr::detail
