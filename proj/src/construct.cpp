namespace tgrs {}
