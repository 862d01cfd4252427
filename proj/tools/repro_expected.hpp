#pragma once

// Pinned renderings of the worked tables; the repro subcommand diffs fresh
// output against these.

inline const char* kExpectBijections = R"EXPECT(triangulated hexagon
 0  0  0  0  0  0  0  0  0  0  0  0
  1  1  1  1  1  1  1  1  1  1  1  1
 1  3  2  1  3  2  1  3  2  1  3  2
  2  5  1  2  5  1  2  5  1  2  5  1
 3  2  1  3  2  1  3  2  1  3  2  1
  1  1  1  1  1  1  1  1  1  1  1  1
 0  0  0  0  0  0  0  0  0  0  0  0
4-angulated hexagon
     0          0          0          0          0          0          0          0          0          0          0          0
          1          1          1          1          1          1          1          1          1          1          1          1
  sqrt(2)   2*sqrt(2)   sqrt(2)    sqrt(2)   2*sqrt(2)   sqrt(2)    sqrt(2)   2*sqrt(2)   sqrt(2)    sqrt(2)   2*sqrt(2)   sqrt(2)
          3          3          1          3          3          1          3          3          1          3          3          1
 2*sqrt(2)   sqrt(2)    sqrt(2)   2*sqrt(2)   sqrt(2)    sqrt(2)   2*sqrt(2)   sqrt(2)    sqrt(2)   2*sqrt(2)   sqrt(2)    sqrt(2)
          1          1          1          1          1          1          1          1          1          1          1          1
     0          0          0          0          0          0          0          0          0          0          0          0
mixed hexagon dissection
      0            0            0            0            0            0            0            0            0            0            0            0
            1            1            1            1            1            1            1            1            1            1            1            1
      1        2+sqrt(2)     sqrt(2)      sqrt(2)     1+sqrt(2)        2            1        2+sqrt(2)     sqrt(2)      sqrt(2)     1+sqrt(2)        2
        1+sqrt(2)   1+2*sqrt(2)       1        1+sqrt(2)   1+2*sqrt(2)       1        1+sqrt(2)   1+2*sqrt(2)       1        1+sqrt(2)   1+2*sqrt(2)       1
  1+sqrt(2)        2            1        2+sqrt(2)     sqrt(2)      sqrt(2)     1+sqrt(2)        2            1        2+sqrt(2)     sqrt(2)      sqrt(2)
            1            1            1            1            1            1            1            1            1            1            1            1
      0            0            0            0            0            0            0            0            0            0            0            0)EXPECT"
;
inline const char* kExpectOrbifold = R"EXPECT(order 2
v0 |  1  1  1
v1 |  2  5  1
v2 |  1  3  2
order 3
v0 |  1  1  1
v1 |  2  7  1
v2 |  1  4  3)EXPECT"
;
inline const char* kExpectInfinite = R"EXPECT( 0   0   0   0   0   0   0   0   0   0   0   0
   1   1   1   1   1   1   1   1   1   1   1   1
 7   1   3   1   4   1   7   1   3   1   4   1
   6   2   2   3   3   6   6   2   2   3   3   6
 11  1   5   2   17  5   11  1   5   2   17  5
   5   2   3   11  14  9   5   2   3   11  14  9)EXPECT"
;
inline const char* kExpectDyck = R"EXPECT(UURURRUURRRRRRR
heights: 2 4 3 5 4 3 5 7 6 5 4 3 2 1 0
labels: (0,9) (1,8) (3,8) (3,6)
rot: UURRUURRRRRRURR)EXPECT"
;
inline const char* kExpectLambda5 = R"EXPECT(period-12 type-Lambda_5 friezes with one 1 per fundamental domain
up to row shift: 3
total: 36)EXPECT"
;
