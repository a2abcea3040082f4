#pragma once

// Reference q-expansion data used by the verification campaigns and the
// acceptance suite.  The text blocks are one-time transcriptions of the
// known-good expansions; golden::parse() revalidates an fnv1a checksum so
// that any later edit of a block is a hard failure, not a silent drift.
//
// Block grammar:  "series <name> <order>" followed by "<m> <coeff>" lines.

#include <cstdint>
#include <string_view>

namespace qlat::golden {

// Q(sqrt(-5)): classical/weighted theta series of both ideal classes and the
// first eigenform, exact integer coefficients through q^500.  The weighted
// series carry their eigenform normalisation (1/2 for each class here).
inline constexpr std::string_view d5_series_text = R"GOLD(
series theta_o 500
0 1
1 2
4 2
5 2
6 4
9 6
14 4
16 2
20 2
21 8
24 4
25 2
29 4
30 4
36 6
41 4
45 6
46 4
49 6
54 8
56 4
61 4
64 2
69 8
70 4
80 2
81 10
84 8
86 4
89 4
94 4
96 4
100 2
101 4
105 8
109 4
116 4
120 4
121 2
125 2
126 12
129 8
134 4
141 8
144 6
145 4
149 4
150 4
161 8
164 4
166 4
169 2
174 8
180 6
181 4
184 4
189 16
196 6
201 8
205 4
206 4
214 4
216 8
224 4
225 6
229 4
230 4
241 4
244 4
245 6
246 8
249 8
254 4
256 2
261 12
269 4
270 8
276 8
280 4
281 4
289 2
294 12
301 8
305 4
309 8
320 2
321 8
324 10
326 4
329 8
334 4
336 8
344 4
345 8
349 4
350 4
356 4
361 2
366 8
369 12
376 4
381 8
384 4
389 4
400 2
401 4
404 4
405 10
406 8
409 4
414 12
420 8
421 4
430 4
436 4
441 18
445 4
446 4
449 4
454 4
461 4
464 4
469 8
470 4
480 4
484 2
486 12
489 8
500 2
series theta_a 500
0 1
2 2
3 4
7 4
8 2
10 2
12 4
15 4
18 6
23 4
27 8
28 4
32 2
35 4
40 2
42 8
43 4
47 4
48 4
50 2
58 4
60 4
63 12
67 4
72 6
75 4
82 4
83 4
87 8
90 6
92 4
98 6
103 4
107 4
108 8
112 4
115 4
122 4
123 8
127 4
128 2
135 8
138 8
140 4
147 12
160 2
162 10
163 4
167 4
168 8
172 4
175 4
178 4
183 8
188 4
192 4
200 2
202 4
203 8
207 12
210 8
215 4
218 4
223 4
227 4
232 4
235 4
240 4
242 2
243 12
250 2
252 12
258 8
263 4
267 8
268 4
282 8
283 4
287 8
288 6
290 4
298 4
300 4
303 8
307 4
315 12
322 8
327 8
328 4
332 4
335 4
338 2
343 8
347 4
348 8
360 6
362 4
363 4
367 4
368 4
375 4
378 16
383 4
387 12
392 6
402 8
410 4
412 4
415 4
423 12
427 8
428 4
432 8
435 8
443 4
447 8
448 4
450 6
458 4
460 4
463 4
467 4
482 4
483 16
487 4
488 4
490 6
492 8
498 8
series wtheta_o 500
1 1
4 4
5 -5
6 -8
9 7
14 8
16 16
20 -20
21 -16
24 -32
25 25
29 -22
30 40
36 28
41 62
45 -35
46 -88
49 -33
54 16
56 32
61 -58
64 64
69 176
70 -40
80 -80
81 -95
84 -64
86 152
89 -142
94 8
96 -128
100 100
101 122
105 80
109 38
116 -88
120 160
121 121
125 -125
126 56
129 -304
134 -232
141 -16
144 112
145 110
149 278
150 -200
161 -176
164 248
166 152
169 169
174 176
180 -140
181 -358
184 -352
189 32
196 -132
201 464
205 -310
206 -88
214 248
216 64
224 128
225 175
229 -262
230 440
241 302
244 -232
245 165
246 -496
249 -304
254 -472
256 256
261 -154
269 38
270 -80
276 704
280 -160
281 -418
289 289
294 264
301 304
305 290
309 176
320 -320
321 -496
324 -380
326 -328
329 16
334 488
336 -256
344 608
345 -880
349 -22
350 200
356 -568
361 361
366 464
369 434
376 32
381 944
384 -512
389 -202
400 400
401 -478
404 488
405 475
406 -176
409 -802
414 -616
420 320
421 -778
430 -760
436 152
441 -231
445 710
446 872
449 398
454 -712
461 842
464 -352
469 -464
470 -40
480 640
484 484
486 616
489 656
500 -500
series wtheta_a 500
2 2
3 -4
7 4
8 8
10 -10
12 -16
15 20
18 14
23 -44
27 8
28 16
32 32
35 -20
40 -40
42 -32
43 76
47 4
48 -64
50 50
58 -44
60 80
63 28
67 -116
72 56
75 -100
82 124
83 76
87 88
90 -70
92 -176
98 -66
103 -44
107 124
108 32
112 64
115 220
122 -116
123 -248
127 -236
128 128
135 -40
138 352
140 -80
147 132
160 -160
162 -190
163 -164
167 244
168 -128
172 304
175 100
178 -284
183 232
188 16
192 -256
200 200
202 244
203 -88
207 -308
210 160
215 -380
218 76
223 436
227 -356
232 -176
235 -20
240 320
242 242
243 308
250 -250
252 112
258 -608
263 -284
267 568
268 -464
282 -32
283 316
287 248
288 224
290 220
298 556
300 -400
303 -488
307 -596
315 -140
322 -352
327 -152
328 496
332 304
335 580
338 338
343 -328
347 -116
348 352
360 -280
362 -716
363 -484
367 724
368 -704
375 500
378 64
383 -44
387 532
392 -264
402 928
410 -620
412 -176
415 -380
423 28
427 -232
428 496
432 128
435 -440
443 796
447 -1112
448 256
450 350
458 -524
460 880
463 -764
467 124
482 604
483 704
487 484
488 -464
490 330
492 -992
498 -608
series psi1 500
1 1
2 2
3 -4
4 4
5 -5
6 -8
7 4
8 8
9 7
10 -10
12 -16
14 8
15 20
16 16
18 14
20 -20
21 -16
23 -44
24 -32
25 25
27 8
28 16
29 -22
30 40
32 32
35 -20
36 28
40 -40
41 62
42 -32
43 76
45 -35
46 -88
47 4
48 -64
49 -33
50 50
54 16
56 32
58 -44
60 80
61 -58
63 28
64 64
67 -116
69 176
70 -40
72 56
75 -100
80 -80
81 -95
82 124
83 76
84 -64
86 152
87 88
89 -142
90 -70
92 -176
94 8
96 -128
98 -66
100 100
101 122
103 -44
105 80
107 124
108 32
109 38
112 64
115 220
116 -88
120 160
121 121
122 -116
123 -248
125 -125
126 56
127 -236
128 128
129 -304
134 -232
135 -40
138 352
140 -80
141 -16
144 112
145 110
147 132
149 278
150 -200
160 -160
161 -176
162 -190
163 -164
164 248
166 152
167 244
168 -128
169 169
172 304
174 176
175 100
178 -284
180 -140
181 -358
183 232
184 -352
188 16
189 32
192 -256
196 -132
200 200
201 464
202 244
203 -88
205 -310
206 -88
207 -308
210 160
214 248
215 -380
216 64
218 76
223 436
224 128
225 175
227 -356
229 -262
230 440
232 -176
235 -20
240 320
241 302
242 242
243 308
244 -232
245 165
246 -496
249 -304
250 -250
252 112
254 -472
256 256
258 -608
261 -154
263 -284
267 568
268 -464
269 38
270 -80
276 704
280 -160
281 -418
282 -32
283 316
287 248
288 224
289 289
290 220
294 264
298 556
300 -400
301 304
303 -488
305 290
307 -596
309 176
315 -140
320 -320
321 -496
322 -352
324 -380
326 -328
327 -152
328 496
329 16
332 304
334 488
335 580
336 -256
338 338
343 -328
344 608
345 -880
347 -116
348 352
349 -22
350 200
356 -568
360 -280
361 361
362 -716
363 -484
366 464
367 724
368 -704
369 434
375 500
376 32
378 64
381 944
383 -44
384 -512
387 532
389 -202
392 -264
400 400
401 -478
402 928
404 488
405 475
406 -176
409 -802
410 -620
412 -176
414 -616
415 -380
420 320
421 -778
423 28
427 -232
428 496
430 -760
432 128
435 -440
436 152
441 -231
443 796
445 710
446 872
447 -1112
448 256
449 398
450 350
454 -712
458 -524
460 880
461 842
463 -764
464 -352
467 124
469 -464
470 -40
480 640
482 604
483 704
484 484
486 616
487 484
488 -464
489 656
490 330
492 -992
498 -608
500 -500
)GOLD";
inline constexpr std::uint64_t d5_series_checksum = 0x3e5bdf610dfd7257ULL;

// Q(sqrt(-23)): theta series, (x^2-y^2)-weighted series scaled by 1/2 or 2,
// and xy-weighted series scaled by 4/sqrt(23), all exact through q^100.
inline constexpr std::string_view d23_series_text = R"GOLD(
series theta_o 100
0 1
1 2
4 2
6 4
8 4
9 2
12 4
16 2
18 4
23 2
24 4
25 2
26 4
27 4
32 4
36 6
39 4
48 8
49 2
52 4
54 4
58 4
59 4
62 4
64 6
72 8
78 4
81 2
82 4
87 4
92 2
93 4
94 4
96 8
100 2
series half_wtheta_o 100
1 1
4 4
6 -11
8 -7
9 9
12 1
16 16
18 13
23 -23
24 -44
25 25
26 29
27 -38
32 -28
36 85
39 -14
48 77
49 49
52 -103
54 -99
58 -91
59 26
62 101
64 -15
72 -11
78 133
81 81
82 -43
87 82
92 -92
93 -182
94 -19
96 -7
100 100
series xy_o 100
series theta_a1 100
0 1
2 2
3 2
4 2
6 2
8 2
9 2
12 4
13 2
16 4
18 4
24 6
26 2
27 2
29 2
31 2
32 4
36 6
39 2
41 2
46 2
47 2
48 6
50 2
52 4
54 6
58 2
62 2
64 4
69 2
71 2
72 8
73 2
75 2
78 6
81 4
82 2
87 2
92 2
93 2
94 2
96 8
98 2
100 2
series twice_wtheta_a1 100
2 8
3 -11
4 -7
6 1
8 32
9 13
12 -88
13 29
16 -56
18 121
24 81
26 -103
27 -99
29 -91
31 101
32 49
36 41
39 133
41 -43
46 -184
47 -19
48 -183
50 200
52 232
54 -295
58 209
62 41
64 -224
69 253
71 77
72 393
73 -283
75 -275
78 -375
81 418
82 -247
87 -227
92 161
93 -203
94 353
96 616
98 392
100 -175
series scaled_xy_a1 100
3 1
4 -3
6 5
9 -7
13 9
18 -11
24 13
26 -3
27 9
29 -15
31 -15
32 21
36 -27
39 17
41 33
47 -39
48 -19
54 45
58 21
62 -51
69 -23
71 57
72 5
73 -15
75 25
78 -35
81 -38
82 45
87 -55
92 69
93 65
94 -27
100 -75
series theta_a2 100
0 1
2 2
3 2
4 2
6 2
8 2
9 2
12 4
13 2
16 4
18 4
24 6
26 2
27 2
29 2
31 2
32 4
36 6
39 2
41 2
46 2
47 2
48 6
50 2
52 4
54 6
58 2
62 2
64 4
69 2
71 2
72 8
73 2
75 2
78 6
81 4
82 2
87 2
92 2
93 2
94 2
96 8
98 2
100 2
series twice_wtheta_a2 100
2 8
3 -11
4 -7
6 1
8 32
9 13
12 -88
13 29
16 -56
18 121
24 81
26 -103
27 -99
29 -91
31 101
32 49
36 41
39 133
41 -43
46 -184
47 -19
48 -183
50 200
52 232
54 -295
58 209
62 41
64 -224
69 253
71 77
72 393
73 -283
75 -275
78 -375
81 418
82 -247
87 -227
92 161
93 -203
94 353
96 616
98 392
100 -175
series scaled_xy_a2 100
3 -1
4 3
6 -5
9 7
13 -9
18 11
24 -13
26 3
27 -9
29 15
31 15
32 -21
36 27
39 -17
41 -33
47 39
48 19
54 -45
58 -21
62 51
69 23
71 -57
72 -5
73 15
75 -25
78 35
81 38
82 -45
87 55
92 -69
93 -65
94 27
100 75
)GOLD";
inline constexpr std::uint64_t d23_series_checksum = 0x6bd5bae679ffe36eULL;

// Q(sqrt(-23)): the three numeric weight-3 eigenforms through q^50.  These
// are approximate values (6 significant digits), compared at 1e-3.
inline constexpr std::string_view d23_psi_text = R"GOLD(
series psi1 50
1 1
2 -3.72545
3 4.24943
4 9.87897
6 -15.831
8 -21.9018
9 9.05761
12 41.9799
13 -21.3624
16 42.0781
18 -33.7437
23 -23
24 -93.07
25 25
26 79.5844
27 0.244826
29 55.473
31 -33.9378
32 -69.1528
36 89.4799
39 -90.7777
41 -8.78692
46 85.6853
47 42.8975
48 178.808
49 49
50 -93.1362
series psi2 50
1 1
2 0.601466
3 1.54364
4 -3.63824
6 0.928445
8 -4.59414
9 -6.61718
12 -5.61612
13 23.5162
16 11.7897
18 -3.98001
23 -23
24 -7.09168
25 25
26 14.1442
27 -24.1073
29 -42.4015
31 -27.9663
32 25.4677
36 24.0749
39 36.3005
41 74.9986
46 -13.8337
47 -93.8839
48 18.1991
49 49
50 15.0366
series psi3 50
1 1
2 3.12398
3 -5.79306
4 5.75927
6 -18.0974
8 5.49593
9 24.5596
12 -33.3638
13 -2.15383
16 -5.86788
18 76.7237
23 -23
24 -31.8383
25 25
26 -6.72853
27 -90.1376
29 -13.0715
31 61.9041
32 -40.3149
36 141.445
39 12.4773
41 -66.2117
46 -71.8516
47 50.9864
48 33.993
49 49
50 78.0996
)GOLD";
inline constexpr std::uint64_t d23_psi_checksum = 0x6bdfa3d5fb4dc261ULL;

}  // namespace qlat::golden
