"""Documents exercising every statement form and ring descriptor."""

CORPUS = [
    "ring Z; matrix A = [[0,1],[-1,0]];",
    "ring Zmod 8; ideal I = <4>;",
    "ring Q; matrix D = [[2,0,0,0],[0,3,0,0],[0,0,1,0],[0,0,0,1/6]];",
    "ring zero;",
    "ring Z; ideal I = <2>; row v = [3,2];",
    "ring Z; ideal M = <5>; row v = [6,5,10];",
    "ring Z; row v = [3,5,0] witness [2,-1,0];",
    "ring Z; matrix C = [[0,1,0,0],[-1,0,0,0],[0,0,0,1],[0,0,-1,0]];",
    "ring Zmod 7; matrix G = [[2,1],[1,1]]; matrix H = [[3]];",
    "ring poly Zmod 5 T; matrix P = [[[1,1],[0,2]],[[0],[1]]];",
    "ring poly Z X; ideal J = <[0,1]>; elem f = [1,0,3];",
    "ring loc Z 6; elem x = 12@2; elem y = 5;",
    "ring Z; matrix A1 : loc Z 2 = [[1,0],[0,1]]; matrix A2 : loc Z 3 = [[1,0],[0,1]];",
    "ring excision Z <2>; matrix L = [[(1|0),(0|2)],[(0|0),(1|0)]];",
    "ring double Z <3>; elem d = (4&1);",
    "ring quot Z 12; elem q = 7;",
    "ring Z; word W sp4 = gen(1,2,2) conj(gen(2,3,1); 1,3,4);",
    "ring Z; word E gl3 = gen(1,2,5) gen(3,1,-2);",
    "ring Z; word N sp6 = ; stword M sp6 = ;",
    "ring Z; stword S sp6 = X(1,3,2) X(1,3,2)^-1;",
    "ring Zmod 8; stword T sp6 = X(1,2,1) X(3,4,5)^-1 X(2,5,7);",
    "ring Q; elem r = 2/3; elem s = -7/5;",
    "ring Z; ideal I = <2, 3>; ideal K = <0>;",
    "ring (poly (Zmod 3) Y); matrix M = [[[1],[0,1]],[[0],[1]]];",
    "ring Z; matrix A = [[0,1],[-1,0]]; matrix B = [[0,-1],[1,0]]; ideal I = <2>;",
    "ring Z; elem a = 5; elem b = -12; matrix Z3 = [[1,0,0],[0,1,0],[0,0,1]];",
    "ring Zmod 9; ideal I = <3>; matrix A = [[0,4,0,0],[-4,0,0,0],[0,0,0,1],[0,0,-1,0]];",
    "ring loc poly Z X [0,1]; elem u = [1,1]@3;",
    "# comment line\nring Z; # trailing comment\nmatrix A = [[1,2],\n  [0,1]];",
    "ring Z; row e = [1,0,0] witness [1,0,0]; word W sp4 = conj(gen(1,3,1) gen(2,4,-1); 2,1,6);",
]
