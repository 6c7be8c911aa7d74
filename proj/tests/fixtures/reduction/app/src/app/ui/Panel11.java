// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.ui;

import app.consts.*;

public class Panel11 {
  private final Widget widget;

  public Panel11(Widget widget) {
    this.widget = widget;
  }

  public void configure() {
    widget.paintColor(Colors.GROVE_COLOR);
    widget.setTimeout(Timeouts.IRIS_TIMEOUT);
  }
}
