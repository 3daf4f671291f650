"""Shared PD fixtures."""

LEFT_TREFOIL = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"
POS_TREFOIL = "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]"
POS_HOPF = "X[1,2,3,4];X[2,1,4,3]"
KINK_TREFOIL = "X[1,5,2,4];X[3,1,4,8];X[5,3,6,2];X[6,7,7,8]"
KINKS = ("X[1,2,2,1]", "X[1,1,2,2]")
# positive diagram of 5_2; its Seifert graph is a 4-cycle with one doubled edge
POS_5_2 = "X[1,5,2,4];X[3,9,4,8];X[5,1,6,10];X[7,3,8,2];X[9,7,10,6]"
TWO_TREFOILS = LEFT_TREFOIL + ";X[11,14,12,15];X[13,16,14,11];X[15,12,16,13]"

V_LEFT_TREFOIL = "-t^-4 + t^-3 + t^-1"
V_POS_TREFOIL = "t + t^3 - t^4"
V_POS_HOPF = "-t^(1/2) - t^(5/2)"
V_12N148_MIRROR = "t^3 + t^6 - 2t^7 + 3t^8 - 3t^9 + 3t^10 - 3t^11 + 2t^12 - t^13"
