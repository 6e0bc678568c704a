/**
 * Recorded service responses for a scripted session
 * (sens 0.80, spec 0.85, prior 0.10, target 0.95; results +, +, -)
 * plus curve/threshold/iterations/table payloads. Values are genuine
 * server outputs; only the session id and timestamp were stabilized.
 */

export const SESSION_ID = "fixture-session-0001";

export const fixtures = {
  "create": {
    "id": "fixture-session-0001",
    "test": {
      "sens": 0.8,
      "spec": 0.85
    },
    "initial_prior": 0.1,
    "target": 0.95,
    "results": [],
    "trajectory": [
      0.1
    ],
    "posterior": 0.1,
    "created_at": 1700000000.0,
    "remaining": {
      "status": "Planned",
      "raw_n": 3.0715268467263748,
      "n_i": 4
    }
  },
  "plus1": {
    "id": "fixture-session-0001",
    "test": {
      "sens": 0.8,
      "spec": 0.85
    },
    "initial_prior": 0.1,
    "target": 0.95,
    "results": [
      "positive"
    ],
    "trajectory": [
      0.1,
      0.372093023255814
    ],
    "posterior": 0.372093023255814,
    "created_at": 1700000000.0,
    "remaining": {
      "status": "Planned",
      "raw_n": 2.0715268467263748,
      "n_i": 3
    }
  },
  "plus2": {
    "id": "fixture-session-0001",
    "test": {
      "sens": 0.8,
      "spec": 0.85
    },
    "initial_prior": 0.1,
    "target": 0.95,
    "results": [
      "positive",
      "positive"
    ],
    "trajectory": [
      0.1,
      0.372093023255814,
      0.7596439169139466
    ],
    "posterior": 0.7596439169139466,
    "created_at": 1700000000.0,
    "remaining": {
      "status": "Planned",
      "raw_n": 1.0715268467263745,
      "n_i": 2
    }
  },
  "minus3": {
    "id": "fixture-session-0001",
    "test": {
      "sens": 0.8,
      "spec": 0.85
    },
    "initial_prior": 0.1,
    "target": 0.95,
    "results": [
      "positive",
      "positive",
      "negative"
    ],
    "trajectory": [
      0.1,
      0.372093023255814,
      0.7596439169139466,
      0.42648896293211164
    ],
    "posterior": 0.42648896293211164,
    "created_at": 1700000000.0,
    "remaining": {
      "status": "Planned",
      "raw_n": 1.9358872725473724,
      "n_i": 2
    }
  },
  "undo": {
    "id": "fixture-session-0001",
    "test": {
      "sens": 0.8,
      "spec": 0.85
    },
    "initial_prior": 0.1,
    "target": 0.95,
    "results": [
      "positive",
      "positive"
    ],
    "trajectory": [
      0.1,
      0.372093023255814,
      0.7596439169139466
    ],
    "posterior": 0.7596439169139466,
    "created_at": 1700000000.0,
    "remaining": {
      "status": "Planned",
      "raw_n": 1.0715268467263745,
      "n_i": 2
    }
  },
  "curve": {
    "kind": "ppv",
    "points": [
      [
        0.0,
        0.0
      ],
      [
        0.125,
        0.4324324324324324
      ],
      [
        0.25,
        0.64
      ],
      [
        0.375,
        0.7619047619047619
      ],
      [
        0.5,
        0.8421052631578947
      ],
      [
        0.625,
        0.898876404494382
      ],
      [
        0.75,
        0.9411764705882353
      ],
      [
        0.875,
        0.9739130434782609
      ],
      [
        1.0,
        1.0
      ]
    ]
  },
  "threshold": {
    "sens": 0.8,
    "spec": 0.85,
    "phi_e": 0.30216947925196225,
    "epsilon": 1.65
  },
  "iterations": {
    "prev": 0.1,
    "target": 0.95,
    "log_lr": 1.6739764335716716,
    "status": "Planned",
    "raw_n": 3.0715268467263748,
    "n_i": 4
  },
  "table99": {
    "target_rho": 0.99,
    "log_lr_values": [
      0.5,
      1.0,
      1.5,
      2.0,
      2.5,
      3.0,
      3.5,
      4.0,
      4.5,
      5.0
    ],
    "phi_values": [
      0.02,
      0.05,
      0.07,
      0.1,
      0.15,
      0.2
    ],
    "cells": [
      [
        16.97388029649043,
        15.079117658602058,
        14.363618388465063,
        13.584688854941616,
        12.65944181104539,
        11.96282842250896
      ],
      [
        8.486940148245216,
        7.539558829301029,
        7.181809194232532,
        6.792344427470808,
        6.329720905522695,
        5.98141421125448
      ],
      [
        5.657960098830144,
        5.026372552867353,
        4.787872796155021,
        4.528229618313872,
        4.21981393701513,
        3.9876094741696533
      ],
      [
        4.243470074122608,
        3.7697794146505146,
        3.590904597116266,
        3.396172213735404,
        3.1648604527613475,
        2.99070710562724
      ],
      [
        3.3947760592980862,
        3.015823531720412,
        2.8727236776930125,
        2.716937770988323,
        2.531888362209078,
        2.392565684501792
      ],
      [
        2.828980049415072,
        2.5131862764336765,
        2.3939363980775106,
        2.264114809156936,
        2.109906968507565,
        1.9938047370848266
      ],
      [
        2.424840042355776,
        2.15415966551458,
        2.0519454840664375,
        1.9406698364202308,
        1.8084916872921986,
        1.7089754889298514
      ],
      [
        2.121735037061304,
        1.8848897073252573,
        1.795452298558133,
        1.698086106867702,
        1.5824302263806738,
        1.49535355281362
      ],
      [
        1.885986699610048,
        1.6754575176224509,
        1.5959575987183403,
        1.5094098727712906,
        1.40660464567171,
        1.329203158056551
      ],
      [
        1.6973880296490431,
        1.507911765860206,
        1.4363618388465063,
        1.3584688854941616,
        1.265944181104539,
        1.196282842250896
      ]
    ],
    "cells_ceiled": [
      [
        17,
        16,
        15,
        14,
        13,
        12
      ],
      [
        9,
        8,
        8,
        7,
        7,
        6
      ],
      [
        6,
        6,
        5,
        5,
        5,
        4
      ],
      [
        5,
        4,
        4,
        4,
        4,
        3
      ],
      [
        4,
        4,
        3,
        3,
        3,
        3
      ],
      [
        3,
        3,
        3,
        3,
        3,
        2
      ],
      [
        3,
        3,
        3,
        2,
        2,
        2
      ],
      [
        3,
        2,
        2,
        2,
        2,
        2
      ],
      [
        2,
        2,
        2,
        2,
        2,
        2
      ],
      [
        2,
        2,
        2,
        2,
        2,
        2
      ]
    ],
    "cells_display": [
      [
        "16.97",
        "15.08",
        "14.36",
        "13.58",
        "12.66",
        "11.96"
      ],
      [
        "8.49",
        "7.54",
        "7.18",
        "6.79",
        "6.33",
        "5.98"
      ],
      [
        "5.66",
        "5.03",
        "4.79",
        "4.53",
        "4.22",
        "3.99"
      ],
      [
        "4.24",
        "3.77",
        "3.59",
        "3.40",
        "3.16",
        "2.99"
      ],
      [
        "3.39",
        "3.02",
        "2.87",
        "2.72",
        "2.53",
        "2.39"
      ],
      [
        "2.83",
        "2.51",
        "2.39",
        "2.26",
        "2.11",
        "1.99"
      ],
      [
        "2.42",
        "2.15",
        "2.05",
        "1.94",
        "1.81",
        "1.71"
      ],
      [
        "2.12",
        "1.88",
        "1.80",
        "1.70",
        "1.58",
        "1.50"
      ],
      [
        "1.89",
        "1.68",
        "1.60",
        "1.51",
        "1.41",
        "1.33"
      ],
      [
        "1.70",
        "1.51",
        "1.44",
        "1.36",
        "1.27",
        "1.20"
      ]
    ]
  },
  "error422": {
    "error": "InfeasibleTarget",
    "message": "no finite number of tests reaches a target PPV of exactly 1 unless the prior is already 1"
  }
} as const;
